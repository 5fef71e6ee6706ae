"""Automata algebra over multi-track alphabets."""

from __future__ import annotations

from .. import graph
from .nba import NBA, ArityError, Stats


class Explicit:
    """Adapter exposing an :class:`NBA` through the on-the-fly interface.

    On-the-fly automata provide ``alphabet``, ``arity``, ``initial_states()``,
    ``successors(state, within)`` returning (guard, state) pairs, and
    ``is_accepting(state)``.  ``within`` is a guard the caller will conjoin
    anyway; implementations may use it to prune.
    """

    def __init__(self, a: NBA):
        self.nba = a
        self.alphabet = a.alphabet
        self.arity = a.arity

    def initial_states(self):
        return sorted(self.nba.initial)

    def successors(self, q, within=None):
        return [(g, d) for d, g in self.nba.edges[q]]

    def is_accepting(self, q) -> bool:
        return q in self.nba.accepting


def as_implicit(a):
    return Explicit(a) if isinstance(a, NBA) else a


def explore(imp) -> NBA:
    """Materialize the reachable part of an on-the-fly automaton."""
    index: dict = {}
    order: list = []
    for s in imp.initial_states():
        if s not in index:
            index[s] = len(order)
            order.append(s)
    trans = []
    i = 0
    while i < len(order):
        s = order[i]
        for g, t in imp.successors(s):
            j = index.get(t)
            if j is None:
                j = index[t] = len(order)
                order.append(t)
                Stats.note(len(order))
            trans.append((i, g, j))
        i += 1
    acc = [k for k, s in enumerate(order) if imp.is_accepting(s)]
    init = [index[s] for s in imp.initial_states()]
    return NBA.build(imp.alphabet, imp.arity, len(order), init, acc, trans)


class Product:
    """Synchronous product of two on-the-fly automata (language intersection).

    ``mode`` picks the acceptance condition: "left"/"right" when the other
    factor is all-accepting, "both" when both factors are weak (a product
    cycle then stays inside one SCC of each factor), and "counter" for the
    general two-phase degeneralization.
    """

    def __init__(self, a, b, mode: str):
        self.a, self.b, self.mode = a, b, mode
        self.alphabet = a.alphabet
        self.arity = a.arity
        self.false = a.alphabet.false

    def initial_states(self):
        out = []
        for p in self.a.initial_states():
            for q in self.b.initial_states():
                out.append((p, q, 0) if self.mode == "counter" else (p, q))
        return out

    def successors(self, s, within=None):
        false = self.false
        out = []
        if self.mode == "counter":
            p, q, c = s
            if c == 0 and self.a.is_accepting(p):
                c = 1
            elif c == 1 and self.b.is_accepting(q):
                c = 0
        else:
            p, q = s[0], s[1]
        for g1, p2 in self.a.successors(p, within):
            w = g1 if within is None else g1 & within
            if w == false:
                continue
            for g2, q2 in self.b.successors(q, w):
                g = w & g2
                if g != false:
                    out.append((g, (p2, q2, c) if self.mode == "counter" else (p2, q2)))
        return out

    def is_accepting(self, s) -> bool:
        if self.mode == "left":
            return self.a.is_accepting(s[0])
        if self.mode == "right":
            return self.b.is_accepting(s[1])
        if self.mode == "both":
            return self.a.is_accepting(s[0]) and self.b.is_accepting(s[1])
        return s[2] == 0 and self.a.is_accepting(s[0])


def product_mode(a, b) -> str:
    if isinstance(b, NBA) and b.all_accepting:
        return "left"
    if isinstance(a, NBA) and a.all_accepting:
        return "right"
    if isinstance(a, NBA) and isinstance(b, NBA) and a.is_weak and b.is_weak:
        return "both"
    return "counter"


def _same(a, b) -> None:
    if a.arity != b.arity:
        raise ArityError(f"arity mismatch: {a.arity} vs {b.arity}")
    if a.alphabet is not b.alphabet:
        raise ArityError("automata over different alphabets")


def intersect(a, b) -> NBA:
    """Language intersection; either argument may be on-the-fly."""
    _same(a, b)
    if isinstance(a, NBA) and a.num_states == 0:
        return a
    if isinstance(b, NBA) and b.num_states == 0:
        return b
    return explore(Product(as_implicit(a), as_implicit(b), product_mode(a, b)))


def union(a: NBA, b: NBA) -> NBA:
    _same(a, b)
    n = a.num_states
    trans = list(a.transitions()) + [(s + n, g, d + n) for s, g, d in b.transitions()]
    return NBA.build(a.alphabet, a.arity, n + b.num_states,
                     list(a.initial) + [q + n for q in b.initial],
                     list(a.accepting) + [q + n for q in b.accepting], trans)


def remap(a: NBA, mapping: dict[int, int], arity: int) -> NBA:
    """Move each track t of ``a`` to mapping.get(t, t) in an automaton of ``arity`` tracks."""
    for t in range(a.arity):
        if not 0 <= mapping.get(t, t) < arity:
            raise ArityError(f"track {t} maps outside arity {arity}")
    alpha = a.alphabet
    trans = [(s, alpha.rename(g, mapping), d) for s, g, d in a.transitions()]
    return NBA.build(alpha, arity, a.num_states, a.initial, a.accepting, trans)


def lift(c: NBA, target_arity: int, target_track: int | None = None) -> NBA:
    """Embed ``c`` over j+1 tracks into ``target_arity`` tracks.

    Tracks 0..j-1 stay in place and c's last track moves to ``target_track``
    (default: the last track).  All other tracks are unconstrained.
    """
    j = c.arity - 1
    if target_track is None:
        target_track = target_arity - 1
    if j < 0 or c.arity > target_arity or not j <= target_track < target_arity:
        raise ArityError(f"cannot lift arity {c.arity} to track {target_track} of {target_arity}")
    return remap(c, {j: target_track}, target_arity)


def project_tracks(a: NBA, tracks) -> NBA:
    """Existentially quantify ``tracks`` and renumber the remaining ones densely."""
    tracks = sorted(set(tracks))
    for t in tracks:
        if not 0 <= t < a.arity:
            raise ArityError(f"track {t} out of range for arity {a.arity}")
    keep = [t for t in range(a.arity) if t not in tracks]
    mapping = {t: i for i, t in enumerate(keep)}
    alpha = a.alphabet
    trans = [(s, alpha.rename(alpha.exist_tracks(g, tracks), mapping), d)
             for s, g, d in a.transitions()]
    return NBA.build(alpha, len(keep), a.num_states, a.initial, a.accepting, trans)


def project_exists(a: NBA, track: int) -> NBA:
    if a.arity < 1:
        raise ArityError("cannot project an automaton without tracks")
    return project_tracks(a, [track])


def restrict(a: NBA, keep) -> NBA:
    keep = sorted(keep)
    pos = {q: i for i, q in enumerate(keep)}
    trans = [(pos[s], g, pos[d]) for s, g, d in a.transitions() if s in pos and d in pos]
    init = [pos[q] for q in a.initial if q in pos]
    return NBA.build(a.alphabet, a.arity, len(keep), init,
                     [pos[q] for q in a.accepting if q in pos], trans)


def trim(a: NBA) -> NBA:
    """Drop states that are unreachable or cannot reach an accepting cycle."""
    n = a.num_states
    if n == 0:
        return a
    indptr, indices = a.csr
    fwd = graph.reachable(n, indptr, indices, sorted(a.initial))
    rindptr, rindices = graph.csr(n, _reverse(a))
    bwd = graph.reachable(n, rindptr, rindices, sorted(a.good_states))
    keep = [q for q in range(n) if fwd[q] and bwd[q]]
    if len(keep) == n:
        return a
    return restrict(a, keep)


def _reverse(a: NBA):
    pred: list[list[int]] = [[] for _ in range(a.num_states)]
    for q, es in enumerate(a.edges):
        for d, _ in es:
            pred[d].append(q)
    return pred


def bisim_reduce(a: NBA) -> NBA:
    """Quotient by the coarsest forward bisimulation that respects acceptance."""
    n = a.num_states
    if n <= 1:
        return a
    block = [1 if q in a.accepting else 0 for q in range(n)]
    count = len(set(block))
    while True:
        sigs: dict = {}
        new = []
        for q in range(n):
            m: dict = {}
            for d, g in a.edges[q]:
                b = block[d]
                m[b] = m[b] | g if b in m else g
            key = (block[q], frozenset(m.items()))
            new.append(sigs.setdefault(key, len(sigs)))
        block = new
        if len(sigs) == count:
            break
        count = len(sigs)
    if count == n:
        return a
    trans = [(block[s], g, block[d]) for s, g, d in a.transitions()]
    return NBA.build(a.alphabet, a.arity, count, {block[q] for q in a.initial},
                     {block[q] for q in a.accepting}, trans)


def determinize_safety(a: NBA, cap: int) -> NBA | None:
    """Subset construction for a trimmed all-accepting automaton.

    Returns None when more than ``cap`` subsets would be needed.
    """
    alpha = a.alphabet
    start = frozenset(a.initial)
    if not start:
        return a
    index = {start: 0}
    order = [start]
    trans = []
    i = 0
    while i < len(order):
        subset = order[i]
        out: dict[int, object] = {}
        for q in sorted(subset):
            for d, g in a.edges[q]:
                out[d] = out[d] | g if d in out else g
        dsts = sorted(out)
        for cls, members in alpha.refine([out[d] for d in dsts]):
            target = frozenset(dsts[k] for k in members)
            j = index.get(target)
            if j is None:
                if len(order) >= cap:
                    return None
                j = index[target] = len(order)
                order.append(target)
            trans.append((i, cls, j))
        i += 1
    Stats.note(len(order))
    return NBA.build(alpha, a.arity, len(order), (0,), range(len(order)), trans)


def reduce(a: NBA, determinize: bool = True) -> NBA:
    """Trim, determinize safety automata when affordable, then quotient."""
    a = trim(a)
    if determinize and a.all_accepting and a.num_states > 1 and not a.is_deterministic:
        d = determinize_safety(a, cap=max(1000, 8 * a.num_states))
        if d is not None:
            a = d
    return bisim_reduce(a)
