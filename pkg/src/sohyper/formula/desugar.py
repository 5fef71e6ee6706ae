"""Removal of membership sugar."""

from __future__ import annotations

from dataclasses import replace

from .ast import (ALL, And, Atom, Const, FixConstraint, FoQuantifier, FormulaAst, Globally, Iff,
                  Implies, Member, Not, Or, Quant, SeedConstraint, SoQuantifier, eq_macro,
                  so_ref, walk)
from .parser import FormulaError

RESTRICTION = "membership atom under a temporal operator"


def _all_names(ast: FormulaAst) -> set[str]:
    names = set()
    for q in ast.prefix:
        if isinstance(q, FoQuantifier):
            names.add(q.var)
        else:
            names.add(q.var)
            for c in q.constraints:
                if isinstance(c, FixConstraint):
                    names.update(v for v, _ in c.dotted)
                    names.update(a.var for a in walk(c.step) if isinstance(a, (Atom, Member)))
    names.update(a.var for a in walk(ast.body) if isinstance(a, (Atom, Member)))
    return names


def _fresh(base: str, used: set[str]) -> str:
    name = base + "'"
    while name in used:
        name += "'"
    used.add(name)
    return name


def desugar_membership(ast: FormulaAst) -> FormulaAst:
    """Rewrite seed conjuncts and body membership atoms into plain quantifiers."""
    used = _all_names(ast)
    prefix = []
    for q in ast.prefix:
        if isinstance(q, SoQuantifier):
            cs = []
            for c in q.constraints:
                if isinstance(c, SeedConstraint):
                    d = _fresh(c.var, used)
                    c = FixConstraint(((d, ALL),), Globally(eq_macro(d, c.var, ast.aps)), 1)
                cs.append(c)
            q = replace(q, constraints=tuple(cs))
        prefix.append(q)
    extra: list[FoQuantifier] = []

    def go(f, positive: bool, temporal: bool):
        match f:
            case Member(v, so):
                if temporal:
                    raise FormulaError(f"'{v} in {so}' rejected: {RESTRICTION}")
                d = _fresh(v, used)
                extra.append(FoQuantifier(Quant.EXISTS if positive else Quant.FORALL, d, so_ref(so)))
                return Globally(eq_macro(d, v, ast.aps))
            case Const() | Atom():
                return f
            case Not(a):
                return Not(go(a, not positive, temporal))
            case And(l, r) | Or(l, r):
                return type(f)(go(l, positive, temporal), go(r, positive, temporal))
            case Implies(l, r):
                return Implies(go(l, not positive, temporal), go(r, positive, temporal))
            case Iff(l, r):
                if any(isinstance(m, Member) for m in walk(f)):
                    raise FormulaError("membership under '<->' has no fixed polarity")
                return f
        if any(isinstance(m, Member) for m in walk(f)):
            raise FormulaError(f"rejected: {RESTRICTION}")
        return f

    body = go(ast.body, True, False)
    return FormulaAst(ast.aps, tuple(prefix) + tuple(extra), body)
