"""Automata for one application of a fixpoint constraint."""

from __future__ import annotations

from ..automata import (NBA, complement, empty_nba, intersect, is_empty,
                        lift, project_tracks, reduce, union)
from ..firstorder import Env, _is_universal
from ..formula.ast import FixConstraint, SoQuantifier
from ..guards import Alphabet
from ..ltl2nba import ltl_to_nba


def _domains(c: FixConstraint, owner: str, env: Env, current: NBA, which: str):
    out = []
    for k, (v, dom) in enumerate(c.dotted):
        if dom.label == owner:
            out.append((k, v, current, True))
        else:
            b = env[dom.label]
            out.append((k, v, b.lower if which == "lower" else b.upper, False))
    # fixed domains first, the changing approximation last
    return sorted(out, key=lambda x: (x[3], x[0]))


def build_step(c: FixConstraint, env: Env, current: NBA, bound_vars, owner: str,
               which: str = "lower", alphabet: Alphabet | None = None) -> NBA:
    """Traces added by one application of ``c`` to ``current``.

    Result tracks are the bound variables followed by the added trace.
    """
    alpha = alphabet or current.alphabet
    bound = list(bound_vars)
    l = len(bound)
    names = bound + [v for v, _ in c.dotted]
    a = ltl_to_nba(c.step, names, alpha)
    target = c.target_var
    for _, v, dom, _ in _domains(c, owner, env, current, which):
        if a.num_states == 0:
            break
        if dom.num_states == 0:
            return empty_nba(alpha, l + 1)
        if not _is_universal(dom):
            a = intersect(a, lift(dom, len(names), names.index(v)))
        if v != target:
            a = reduce(project_tracks(a, [names.index(v)]))
            names.remove(v)
        else:
            a = reduce(a)
    rest = [names.index(v) for v in names[l:] if v != target]
    if rest:
        a = reduce(project_tracks(a, rest))
    if a.num_states == 0:
        return empty_nba(alpha, l + 1)
    return a


def apply_constraints(so: SoQuantifier, env: Env, current: NBA, bound_vars,
                      which: str = "lower") -> NBA:
    """Union of :func:`build_step` over all constraints of ``so``."""
    out = empty_nba(current.alphabet, len(bound_vars) + 1)
    for c in so.constraints:
        out = union(out, build_step(c, env, current, bound_vars, so.var, which))
    return reduce(out)


def step_witness(so: SoQuantifier, env: Env, current: NBA, bound_vars, outside: NBA,
                 which: str = "upper"):
    """A derivation producing a trace outside ``outside`` from ``current``.

    Returns (constraint, lasso over bound + dotted tracks) or None.
    """
    alpha = current.alphabet
    bound = list(bound_vars)
    for c in so.constraints:
        names = bound + [v for v, _ in c.dotted]
        a = ltl_to_nba(c.step, names, alpha)
        for _, v, dom, _ in _domains(c, so.var, env, current, which):
            if a.num_states == 0 or dom.num_states == 0:
                a = empty_nba(alpha, len(names))
                break
            if not _is_universal(dom):
                a = reduce(intersect(a, lift(dom, len(names), names.index(v))))
        if a.num_states == 0:
            continue
        target_track = names.index(c.target_var)
        bad = intersect(a, lift(complement(outside), len(names), target_track))
        w = is_empty(bad)
        if w is not None:
            return c, w
    return None
