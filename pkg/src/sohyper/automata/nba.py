"""Büchi automata over zipped alphabets with BDD guards."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .. import graph
from ..guards import Alphabet, Letter


class ArityError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An automaton construction exceeded the configured state budget."""


class Stats:
    """Process-wide construction limits and counters."""

    state_budget: int = 1_000_000
    peak_states: int = 0

    @classmethod
    def reset(cls, budget: int | None = None) -> None:
        cls.peak_states = 0
        if budget is not None:
            cls.state_budget = budget

    @classmethod
    def note(cls, n: int) -> None:
        if n > cls.peak_states:
            cls.peak_states = n
        if n > cls.state_budget:
            raise BudgetExceeded(f"automaton exceeded the state budget of {cls.state_budget}")


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word prefix . cycle^omega over a k-track alphabet."""

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("lasso cycle must be nonempty")
        widths = {len(x) for x in self.prefix + self.cycle}
        if len(widths) > 1:
            raise ArityError("lasso letters have differing track counts")

    @property
    def arity(self) -> int:
        return len(self.cycle[0])

    def __len__(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def letter(self, i: int) -> Letter:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def next_pos(self, i: int) -> int:
        return i + 1 if i + 1 < len(self) else len(self.prefix)

    def track(self, t: int) -> "LassoWord":
        return LassoWord(tuple((x[t],) for x in self.prefix), tuple((x[t],) for x in self.cycle))

    @staticmethod
    def zip(words: list["LassoWord"]) -> "LassoWord":
        """Zip lassos (each of any arity) into one lasso over the concatenated tracks."""
        from math import lcm

        if not words:
            return LassoWord((), ((),))
        p = max(len(w.prefix) for w in words)
        c = lcm(*(len(w.cycle) for w in words))

        def at(i):
            return tuple(x for w in words for x in w.letter(i))

        return LassoWord(tuple(at(i) for i in range(p)), tuple(at(i) for i in range(p, p + c)))

    def canonical(self) -> "LassoWord":
        """Shortest equivalent lasso: primitive cycle, prefix rolled into it."""
        prefix, cycle = list(self.prefix), list(self.cycle)
        n = len(cycle)
        for d in range(1, n + 1):
            if n % d == 0 and cycle == cycle[:d] * (n // d):
                cycle = cycle[:d]
                break
        while prefix and prefix[-1] == cycle[-1]:
            prefix.pop()
            cycle = [cycle[-1]] + cycle[:-1]
        return LassoWord(tuple(prefix), tuple(cycle))

    def show(self, aps=None) -> str:
        def fmt(x):
            tracks = ["{" + ",".join(sorted(s)) + "}" for s in x]
            return tracks[0] if len(tracks) == 1 else "(" + " ".join(tracks) + ")"

        return " ".join(map(fmt, self.prefix)) + " (" + " ".join(map(fmt, self.cycle)) + ")^w"


@dataclass(frozen=True, eq=False)
class NBA:
    """Nondeterministic Büchi automaton over the ``arity``-track alphabet.

    ``edges[q]`` lists (successor, guard) pairs, sorted by successor, with at
    most one pair per successor and no unsatisfiable guards.
    """

    alphabet: Alphabet
    arity: int
    num_states: int
    initial: frozenset
    accepting: frozenset
    edges: tuple

    @staticmethod
    def build(alphabet: Alphabet, arity: int, num_states: int, initial: Iterable[int],
              accepting: Iterable[int], transitions: Iterable[tuple[int, object, int]]) -> "NBA":
        if arity < 0 or arity > alphabet.max_tracks:
            raise ArityError(f"unsupported arity {arity}")
        out: list[dict] = [{} for _ in range(num_states)]
        false = alphabet.false
        for src, g, dst in transitions:
            if g == false:
                continue
            d = out[src]
            d[dst] = d[dst] | g if dst in d else g
        edges = tuple(tuple(sorted(d.items(), key=lambda e: e[0])) for d in out)
        initial, accepting = frozenset(initial), frozenset(accepting)
        if any(not 0 <= q < num_states for q in initial | accepting):
            raise ValueError(f"state index out of range 0..{num_states - 1}")
        Stats.note(num_states)
        return NBA(alphabet, arity, num_states, initial, accepting, edges)

    def __repr__(self) -> str:
        return (f"NBA(arity={self.arity}, states={self.num_states}, "
                f"initial={sorted(self.initial)}, accepting={len(self.accepting)})")

    # -- structure -------------------------------------------------------
    @cached_property
    def csr(self):
        return graph.csr(self.num_states, [[d for d, _ in es] for es in self.edges])

    @cached_property
    def scc_ids(self):
        indptr, indices = self.csr
        return graph.scc(self.num_states, indptr, indices)

    @cached_property
    def nontrivial(self) -> frozenset:
        """States lying on some cycle."""
        comp = self.scc_ids
        size: dict[int, int] = {}
        for q in range(self.num_states):
            size[comp[q]] = size.get(comp[q], 0) + 1
        out = set()
        for q, es in enumerate(self.edges):
            if size[comp[q]] > 1 or any(d == q for d, _ in es):
                out.add(q)
        return frozenset(out)

    @cached_property
    def all_accepting(self) -> bool:
        return len(self.accepting) == self.num_states

    @cached_property
    def is_deterministic(self) -> bool:
        if len(self.initial) > 1:
            return False
        false = self.alphabet.false
        for es in self.edges:
            for i in range(len(es)):
                for j in range(i + 1, len(es)):
                    if (es[i][1] & es[j][1]) != false:
                        return False
        return True

    @cached_property
    def is_weak(self) -> bool:
        """Every cycle-carrying SCC is entirely accepting or entirely rejecting."""
        comp = self.scc_ids
        kind: dict[int, bool] = {}
        for q in self.nontrivial:
            acc = q in self.accepting
            if kind.setdefault(comp[q], acc) != acc:
                return False
        return True

    @cached_property
    def good_states(self) -> frozenset:
        """States in SCCs that contain an accepting cycle."""
        comp = self.scc_ids
        good = {comp[q] for q in self.nontrivial if q in self.accepting}
        return frozenset(q for q in self.nontrivial if comp[q] in good)

    def successors(self, q: int):
        return self.edges[q]

    def transitions(self):
        for q, es in enumerate(self.edges):
            for d, g in es:
                yield q, g, d

    @property
    def num_edges(self) -> int:
        return sum(len(es) for es in self.edges)


def empty_nba(alphabet: Alphabet, arity: int) -> NBA:
    return NBA.build(alphabet, arity, 0, (), (), ())


def universal_nba(alphabet: Alphabet, arity: int = 1) -> NBA:
    return NBA.build(alphabet, arity, 1, (0,), (0,), [(0, alphabet.true, 0)])


def lasso_nba(alphabet: Alphabet, w: LassoWord) -> NBA:
    """Deterministic automaton accepting exactly the word ``w``."""
    n = len(w)
    trans = [(i, alphabet.minterm(w.letter(i)), w.next_pos(i)) for i in range(n)]
    return NBA.build(alphabet, w.arity, n, (0,), range(len(w.prefix), n), trans)
