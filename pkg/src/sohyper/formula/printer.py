"""Pretty printing back into the concrete syntax (round-trips through the parser)."""

from __future__ import annotations

from .ast import (And, Atom, Const, Eventually, FixConstraint, FoQuantifier, FormulaAst,
                  Globally, Iff, Implies, Member, Next, Not, Or, SeedConstraint, Until,
                  WeakUntil)

_BINARY = {And: "&", Or: "|", Implies: "->", Iff: "<->", Until: "U", WeakUntil: "W"}
_UNARY = {Not: "!", Next: "X ", Globally: "G ", Eventually: "F "}


def ltl_to_text(f) -> str:
    match f:
        case Const(v):
            return "true" if v else "false"
        case Atom(p, v):
            return f"{p}@{v}"
        case Member(v, so):
            return f"{v} in {so}"
    op = _UNARY.get(type(f))
    if op is not None:
        return op + ltl_to_text(f.arg)
    return f"({ltl_to_text(f.left)} {_BINARY[type(f)]} {ltl_to_text(f.right)})"


def constraint_to_text(c, owner: str) -> str:
    if isinstance(c, SeedConstraint):
        return f"{c.var} in {owner}"
    quants = " ".join(f"forall {v} in {d}." for v, d in c.dotted)
    return f"{quants} {ltl_to_text(c.step)} => {c.target_var} in {owner}"


def to_text(ast: FormulaAst) -> str:
    parts = []
    for q in ast.prefix:
        if isinstance(q, FoQuantifier):
            parts.append(f"{q.quant.value} {q.var} in {q.domain}")
        else:
            body = " ;\n    ".join(constraint_to_text(c, q.var) for c in q.constraints)
            parts.append(f"fix {q.var} {q.mode.value} {{\n    {body}\n}}")
    parts.append(ltl_to_text(ast.body))
    return ".\n".join(parts) + "\n"
