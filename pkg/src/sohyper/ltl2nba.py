"""LTL over trace variables to Büchi automata, plus a direct lasso evaluator.

The translation is a tableau: states are sets of obligations in negation
normal form, expanded into (literals, next obligations) terms; each until
subformula contributes a transition acceptance set containing the edges on
which it is not postponed.  The generalized automaton is degeneralized with a
level counter.
"""

from __future__ import annotations

from functools import lru_cache

from .automata import NBA, LassoWord, reduce
from .formula.ast import (And, Atom, Const, Eventually, Globally, Iff, Implies, Member, Next,
                          Not, Or, Until, WeakUntil)
from .guards import Alphabet


class TranslationError(ValueError):
    pass


# -- normalization to the core {true, atom, not, and, next, until} --------------

def normalize(f):
    match f:
        case Const(True) | Atom():
            return f
        case Const(False):
            return Not(Const(True))
        case Not(a):
            return Not(normalize(a))
        case And(l, r):
            return And(normalize(l), normalize(r))
        case Or(l, r):
            return Not(And(Not(normalize(l)), Not(normalize(r))))
        case Implies(l, r):
            return Not(And(normalize(l), Not(normalize(r))))
        case Iff(l, r):
            a, b = normalize(l), normalize(r)
            return And(Not(And(a, Not(b))), Not(And(b, Not(a))))
        case Next(a):
            return Next(normalize(a))
        case Until(l, r):
            return Until(normalize(l), normalize(r))
        case Eventually(a):
            return Until(Const(True), normalize(a))
        case Globally(a):
            return Not(Until(Const(True), Not(normalize(a))))
        case WeakUntil(l, r):
            a, b = normalize(l), normalize(r)
            return Not(And(Not(Until(a, b)), Not(Not(Until(Const(True), Not(a))))))
        case Member():
            raise TranslationError("membership atoms must be desugared before translation")
    raise TranslationError(f"unexpected formula node {f!r}")


# -- negation normal form over hashable tuples ------------------------------------
# ("t",) ("f",) ("lit", track, prop, polarity) ("and", frozenset) ("or", frozenset)
# ("X", g) ("U", g, h) ("R", g, h)

T, F = ("t",), ("f",)


@lru_cache(maxsize=1 << 16)
def _canon(f) -> tuple:
    """Sort key independent of hash order (frozenset reprs are not)."""
    if f[0] in ("and", "or"):
        return (f[0], tuple(sorted(_canon(g) for g in f[1])))
    return tuple(_canon(x) if isinstance(x, tuple) else x for x in f)


def _junction(kind, parts):
    unit, zero = (T, F) if kind == "and" else (F, T)
    flat = set()
    for p in parts:
        if p == zero:
            return zero
        if p == unit:
            continue
        if p[0] == kind:
            flat |= p[1]
        else:
            flat.add(p)
    if kind == "or":
        # (a U b) | (false R a)  is the weak until  b R (a | b)
        for u in sorted((p for p in flat if p[0] == "U"), key=_canon):
            g = ("R", F, u[1])
            if g in flat and u in flat:
                flat -= {u, g}
                flat.add(_mk_r(u[2], _junction("or", [u[1], u[2]])))
    if not flat:
        return unit
    if len(flat) == 1:
        return next(iter(flat))
    return (kind, frozenset(flat))


def _mk_u(a, b):
    if b in (T, F) or a == F:
        return b
    return ("U", a, b)


def _mk_r(a, b):
    if b in (T, F) or a == T:
        return b
    return ("R", a, b)


def _mk_x(a):
    return a if a in (T, F) else ("X", a)


def nnf(f, tracks: dict[str, int], positive: bool = True):
    match f:
        case Const(True):
            return T if positive else F
        case Atom(p, v):
            if v not in tracks:
                raise TranslationError(f"trace variable {v!r} has no track")
            return ("lit", tracks[v], p, positive)
        case Not(a):
            return nnf(a, tracks, not positive)
        case And(l, r):
            return _junction("and" if positive else "or", [nnf(l, tracks, positive), nnf(r, tracks, positive)])
        case Next(a):
            return _mk_x(nnf(a, tracks, positive))
        case Until(l, r):
            if positive:
                return _mk_u(nnf(l, tracks, True), nnf(r, tracks, True))
            return _mk_r(nnf(l, tracks, False), nnf(r, tracks, False))
    raise TranslationError(f"operator outside the core reached the translator: {f!r}")


# -- tableau ---------------------------------------------------------------------

def _expand(state: frozenset):
    """Terms (literals, next obligations, postponed untils) covering ``state``."""
    out = []

    def go(todo, lits, nexts, pending):
        if not todo:
            out.append((lits, frozenset(nexts), frozenset(pending)))
            return
        f, rest = todo[0], todo[1:]
        kind = f[0]
        if kind == "t":
            go(rest, lits, nexts, pending)
        elif kind == "f":
            return
        elif kind == "lit":
            key = (f[1], f[2])
            if lits.get(key, f[3]) != f[3]:
                return
            go(rest, {**lits, key: f[3]}, nexts, pending)
        elif kind == "and":
            go(sorted(f[1], key=_canon) + rest, lits, nexts, pending)
        elif kind == "or":
            for g in sorted(f[1], key=_canon):
                go([g] + rest, lits, nexts, pending)
        elif kind == "X":
            go(rest, lits, nexts | {f[1]}, pending)
        elif kind == "U":
            go([f[2]] + rest, lits, nexts, pending)
            go([f[1]] + rest, lits, nexts | {f}, pending | {f})
        elif kind == "R":
            go([f[1], f[2]] + rest, lits, nexts, pending)
            go([f[2]] + rest, lits, nexts | {f}, pending)
        else:  # pragma: no cover
            raise TranslationError(f"bad nnf node {f!r}")

    go(sorted(state, key=_canon), {}, frozenset(), frozenset())
    terms = []
    seen = set()
    for lits, nexts, pending in out:
        key = (frozenset(lits.items()), nexts, pending)
        if key not in seen:
            seen.add(key)
            terms.append(key)
    # drop terms subsumed by a weaker term (fewer literals, obligations, postponements)
    keep = []
    for t in terms:
        if not any(o is not t and o[0] <= t[0] and o[1] <= t[1] and o[2] <= t[2]
                   and (o[0], o[1], o[2]) != (t[0], t[1], t[2]) for o in terms):
            keep.append(t)
    return keep


def _untils(f, acc):
    if f[0] == "U":
        acc.setdefault(f, len(acc))
    if f[0] in ("and", "or"):
        for g in sorted(f[1], key=_canon):
            _untils(g, acc)
    elif f[0] in ("X",):
        _untils(f[1], acc)
    elif f[0] in ("U", "R"):
        _untils(f[1], acc)
        _untils(f[2], acc)
    return acc


def ltl_to_nba(body, track_order, alphabet: Alphabet) -> NBA:
    """NBA over len(track_order) tracks accepting the zipped traces satisfying ``body``."""
    tracks = {v: i for i, v in enumerate(track_order)}
    root = nnf(normalize(body), tracks)
    untils = list(_untils(root, {}))
    k = len(untils)
    start = frozenset([root]) if root != T else frozenset()
    if root == F:
        return NBA.build(alphabet, len(track_order), 0, (), (), ())
    index = {start: 0}
    order = [start]
    gba = []  # (src, guard, dst, marks)
    cache: dict = {}
    i = 0
    while i < len(order):
        state = order[i]
        for lits, nexts, pending in _expand(state):
            g = cache.get(lits)
            if g is None:
                g = alphabet.true
                for (t, p), pol in sorted(lits):
                    v = alphabet.lit(t, p)
                    g = g & (v if pol else ~v)
                cache[lits] = g
            j = index.get(nexts)
            if j is None:
                j = index[nexts] = len(order)
                order.append(nexts)
            marks = frozenset(n for n, u in enumerate(untils) if u not in pending)
            gba.append((i, g, j, marks))
        i += 1
    arity = len(track_order)
    if k == 0:
        n = len(order)
        nba = NBA.build(alphabet, arity, n, (0,), range(n), [(s, g, d) for s, g, d, _ in gba])
        return reduce(nba)
    # degeneralize: level k marks acceptance
    out_edges: dict[int, list] = {}
    for s, g, d, marks in gba:
        out_edges.setdefault(s, []).append((g, d, marks))
    idx = {(0, 0): 0}
    states = [(0, 0)]
    trans = []
    i = 0
    while i < len(states):
        q, lvl = states[i]
        base = 0 if lvl == k else lvl
        for g, d, marks in out_edges.get(q, ()):
            j = base
            while j < k and j in marks:
                j += 1
            key = (d, j)
            n = idx.get(key)
            if n is None:
                n = idx[key] = len(states)
                states.append(key)
            trans.append((i, g, n))
        i += 1
    acc = [n for n, (_, lvl) in enumerate(states) if lvl == k]
    return reduce(NBA.build(alphabet, arity, len(states), (0,), acc, trans))


# -- direct evaluation on lasso words --------------------------------------------

def eval_ltl_on_lasso(body, w: LassoWord, track_order) -> bool:
    """Evaluate ``body`` at position 0 of the zipped lasso ``w``.

    Temporal operators are computed as least (until) or greatest (globally,
    weak until) fixpoints over the finitely many lasso positions.
    """
    tracks = {v: i for i, v in enumerate(track_order)}
    n = len(w)
    succ = [w.next_pos(i) for i in range(n)]
    memo: dict[int, list[bool]] = {}

    def fix(init: bool, step):
        val = [init] * n
        while True:
            new = [step(i, val) for i in range(n)]
            if new == val:
                return val
            val = new

    def ev(f) -> list[bool]:
        key = id(f)
        if key in memo:
            return memo[key]
        match f:
            case Const(v):
                r = [v] * n
            case Atom(p, v):
                t = tracks[v]
                r = [p in w.letter(i)[t] for i in range(n)]
            case Not(a):
                r = [not x for x in ev(a)]
            case And(l, rr):
                r = [x and y for x, y in zip(ev(l), ev(rr))]
            case Or(l, rr):
                r = [x or y for x, y in zip(ev(l), ev(rr))]
            case Implies(l, rr):
                r = [(not x) or y for x, y in zip(ev(l), ev(rr))]
            case Iff(l, rr):
                r = [x == y for x, y in zip(ev(l), ev(rr))]
            case Next(a):
                va = ev(a)
                r = [va[succ[i]] for i in range(n)]
            case Until(l, rr):
                a, b = ev(l), ev(rr)
                r = fix(False, lambda i, v: b[i] or (a[i] and v[succ[i]]))
            case WeakUntil(l, rr):
                a, b = ev(l), ev(rr)
                r = fix(True, lambda i, v: b[i] or (a[i] and v[succ[i]]))
            case Eventually(a):
                b = ev(a)
                r = fix(False, lambda i, v: b[i] or v[succ[i]])
            case Globally(a):
                b = ev(a)
                r = fix(True, lambda i, v: b[i] and v[succ[i]])
            case _:
                raise TranslationError(f"cannot evaluate {f!r}")
        memo[key] = r
        return r

    if w.arity != len(track_order):
        raise ValueError(f"word has {w.arity} tracks, expected {len(track_order)}")
    return ev(body)[0]
