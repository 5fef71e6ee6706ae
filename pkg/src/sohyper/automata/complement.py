"""Büchi complementation, built on the fly.

Three constructions, tried in order: the two-copy complement for
deterministic automata, the breakpoint construction for weak automata, and
a rank-based construction with tight level rankings for everything else.
Each is an on-the-fly automaton, so a complement can be explored inside a
product without materializing unreachable parts.
"""

from __future__ import annotations

from itertools import product as cartesian

from .nba import NBA, BudgetExceeded, universal_nba
from .ops import explore, reduce, trim

SINK = -1
RANKING_CAP = 200_000


def _edge_classes(a: NBA, sources, within, keep_empty=True):
    """Letter classes for the joint moves of ``sources``.

    Yields (class guard, set of (src, dst) moves enabled on the class).
    """
    moves = [(q, d) for q in sorted(sources) for d, _ in a.edges[q]]
    guards = [g for q in sorted(sources) for _, g in a.edges[q]]
    for cls, members in a.alphabet.refine(guards, within, keep_empty=keep_empty):
        yield cls, [moves[k] for k in sorted(members)]


class DetComplement:
    def __init__(self, a: NBA):
        self.a = a
        self.alphabet, self.arity = a.alphabet, a.arity
        self._missing = {}

    def initial_states(self):
        return [(0, q) for q in sorted(self.a.initial)]

    def _miss(self, q):
        m = self._missing.get(q)
        if m is None:
            cover = self.alphabet.false
            for _, g in self.a.edges[q]:
                cover = cover | g
            m = self._missing[q] = ~cover
        return m

    def successors(self, s, within=None):
        copy, q = s
        acc = self.a.accepting
        false = self.alphabet.false
        if q == SINK:
            t = self.alphabet.true
            return [(t, (0, SINK)), (t, (1, SINK))] if copy == 0 else [(t, (1, SINK))]
        out = []
        for d, g in self.a.edges[q]:
            if copy == 0:
                out.append((g, (0, d)))
            if d not in acc:
                out.append((g, (1, d)))
        miss = self._miss(q)
        if miss != false:
            if copy == 0:
                out.append((miss, (0, SINK)))
            out.append((miss, (1, SINK)))
        return out

    def is_accepting(self, s) -> bool:
        return s[0] == 1


class WeakComplement:
    """Breakpoint construction: every run must leave the accepting SCCs infinitely often."""

    def __init__(self, a: NBA):
        self.a = a
        self.alphabet, self.arity = a.alphabet, a.arity
        self.good = a.good_states

    def initial_states(self):
        s = frozenset(self.a.initial)
        return [(s, s & self.good)]

    def successors(self, state, within=None):
        subset, owing = state
        out = []
        for cls, moves in _edge_classes(self.a, subset, within):
            nxt = frozenset(d for _, d in moves)
            if owing:
                nowing = frozenset(d for q, d in moves if q in owing) & self.good
            else:
                nowing = nxt & self.good
            out.append((cls, (nxt, nowing)))
        return out

    def is_accepting(self, state) -> bool:
        return not state[1]


def _tight(ranks) -> bool:
    if not ranks:
        return True
    top = max(ranks)
    if top % 2 == 0:
        return False
    return set(range(1, top + 1, 2)) <= set(ranks)


class RankComplement:
    """Rank-based complement with tight level rankings.

    States are ("S", subset) in the guessing phase and ("R", ranking, owing)
    afterwards, where ranking is a sorted tuple of (state, rank) pairs.
    """

    def __init__(self, a: NBA):
        self.a = a
        self.alphabet, self.arity = a.alphabet, a.arity
        self.max_rank = 2 * a.num_states - 1

    def initial_states(self):
        return [("S", frozenset(self.a.initial))]

    def _rankings(self, bounds: dict):
        acc = self.a.accepting
        states = sorted(bounds)
        choices = []
        total = 1
        for q in states:
            hi = min(bounds[q], self.max_rank)
            opts = [r for r in range(hi + 1) if q not in acc or r % 2 == 0]
            if not opts:
                return
            choices.append(opts)
            total *= len(opts)
        if total > RANKING_CAP:
            raise BudgetExceeded(f"rank-based complement needs {total} rankings for one step")
        for combo in cartesian(*choices):
            if _tight(combo):
                yield tuple(zip(states, combo))

    def successors(self, state, within=None):
        out = []
        if state[0] == "S":
            subset = state[1]
            for cls, moves in _edge_classes(self.a, subset, within):
                nxt = frozenset(d for _, d in moves)
                out.append((cls, ("S", nxt)))
                for f in self._rankings({d: self.max_rank for d in nxt}):
                    out.append((cls, ("R", f, frozenset())))
            return out
        _, f, owing = state
        rank = dict(f)
        for cls, moves in _edge_classes(self.a, rank, within):
            bounds: dict[int, int] = {}
            for q, d in moves:
                bounds[d] = min(bounds.get(d, rank[q]), rank[q])
            for f2 in self._rankings(bounds):
                even = frozenset(d for d, r in f2 if r % 2 == 0)
                if owing:
                    nowing = frozenset(d for q, d in moves if q in owing) & even
                else:
                    nowing = even
                out.append((cls, ("R", f2, nowing)))
        return out

    def is_accepting(self, state) -> bool:
        return state[0] == "R" and not state[2]


def complement_builder(a: NBA):
    """On-the-fly complement of ``a``, choosing the cheapest applicable construction."""
    a = trim(a)
    if a.num_states == 0:
        return _Universal(universal_nba(a.alphabet, a.arity))
    if a.is_deterministic:
        return DetComplement(a)
    if a.is_weak:
        return WeakComplement(a)
    return RankComplement(a)


class _Universal:
    def __init__(self, u: NBA):
        self.alphabet, self.arity = u.alphabet, u.arity
        self.u = u

    def initial_states(self):
        return [0]

    def successors(self, s, within=None):
        return [(self.alphabet.true, 0)]

    def is_accepting(self, s) -> bool:
        return True


def complement(a: NBA) -> NBA:
    return reduce(explore(complement_builder(a)), determinize=False)
