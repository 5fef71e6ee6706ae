"""Scoping rules and membership in the least-fixpoint fragment."""

from __future__ import annotations

from .ast import (FixConstraint, FixMode, FoQuantifier, FormulaAst, Member, SeedConstraint,
                  SoKind, SoQuantifier, trace_vars, walk)
from .parser import FormulaError


def _scope_problems(ast: FormulaAst) -> list[str]:
    problems = []
    sos: set[str] = set()
    fos: list[str] = []

    def domain_ok(dom, owner=None) -> bool:
        return dom.kind is not SoKind.USER or dom.name in sos or dom.name == owner

    for q in ast.prefix:
        if isinstance(q, FoQuantifier):
            if not domain_ok(q.domain):
                problems.append(f"second-order variable used before quantification: {q.domain.name}")
            if q.var in fos:
                problems.append(f"trace variable {q.var!r} is quantified twice")
            fos.append(q.var)
            continue
        if q.var in sos or q.var in ("S", "A"):
            problems.append(f"second-order variable {q.var!r} is quantified twice or reserved")
        for k, c in enumerate(q.constraints, 1):
            where = f"fix {q.var}, constraint {k}"
            if isinstance(c, SeedConstraint):
                if c.var not in fos:
                    problems.append(f"{where}: unbound trace variable {c.var!r}")
                continue
            names = [v for v, _ in c.dotted]
            if len(set(names)) != len(names) or set(names) & set(fos):
                problems.append(f"{where}: constraint variables must be fresh and distinct")
            for v, dom in c.dotted:
                if not domain_ok(dom, q.var):
                    problems.append(f"second-order variable used before quantification: {dom.name}")
            for v in sorted(trace_vars(c.step) - set(names) - set(fos)):
                problems.append(f"{where}: unbound trace variable {v!r}")
            for m in walk(c.step):
                if isinstance(m, Member) and m.so not in sos | {q.var, "S", "A"}:
                    problems.append(f"second-order variable used before quantification: {m.so}")
        sos.add(q.var)
    for v in sorted(trace_vars(ast.body) - set(fos)):
        problems.append(f"unbound trace variable {v!r}")
    for m in walk(ast.body):
        if isinstance(m, Member) and m.so not in sos | {"S", "A"}:
            problems.append(f"second-order variable used before quantification: {m.so}")
    return problems


def check_scopes(ast: FormulaAst) -> None:
    problems = _scope_problems(ast)
    if problems:
        raise FormulaError(problems[0])


def validate_fragment(ast: FormulaAst) -> list[str]:
    """Diagnostics explaining why ``ast`` is outside the supported fragment (empty if inside)."""
    problems = _scope_problems(ast)
    for q in ast.so_quantifiers:
        if q.mode is FixMode.GREATEST:
            problems.append(f"fix {q.var}: unsupported: ⋏ (greatest fixpoints are not handled)")
        if not q.constraints:
            problems.append(f"fix {q.var}: no constraints")
        for k, c in enumerate(q.constraints, 1):
            where = f"fix {q.var}, constraint {k}"
            if isinstance(c, SeedConstraint):
                problems.append(f"{where}: seed conjunct was not desugared")
                continue
            if not isinstance(c, FixConstraint):
                problems.append(f"{where}: not a fixpoint constraint")
                continue
            if not 1 <= c.target <= len(c.dotted):
                problems.append(f"{where}: target index {c.target} out of range")
            if any(isinstance(m, Member) for m in walk(c.step)):
                problems.append(f"{where}: step formula contains a quantifier (membership atom)")
    if any(isinstance(m, Member) for m in walk(ast.body)):
        problems.append("body contains membership atoms; desugar them first")
    return problems
