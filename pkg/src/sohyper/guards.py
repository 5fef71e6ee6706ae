"""Symbolic letters over zipped multi-track alphabets.

A letter of the k-track alphabet assigns a subset of the atomic propositions
to every track.  Guards are BDDs over one boolean variable per (track, prop)
pair.  Variables are declared prop-major, so all tracks of one proposition
sit next to each other in the order; this keeps track-equality guards small.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

try:  # compiled CUDD bindings when available
    from dd import cudd as _backend

    BACKEND = "cudd"
except ImportError:  # pragma: no cover - depends on the installed wheel
    from dd import autoref as _backend

    BACKEND = "autoref"

Letter = tuple  # tuple[frozenset[str], ...], one entry per track

MAX_TRACKS = 16


class AlphabetError(ValueError):
    pass


def _check_aps(aps: Sequence[str]) -> tuple[str, ...]:
    out = tuple(aps)
    for p in out:
        if not isinstance(p, str) or not p or any(ch.isspace() for ch in p):
            raise AlphabetError(f"invalid proposition name {p!r}")
    if len(set(out)) != len(out):
        raise AlphabetError(f"duplicate propositions in {out}")
    return out


class Alphabet:
    """BDD manager plus the naming scheme for one set of propositions.

    Instances are interned per AP tuple via :meth:`of`, so automata built
    independently over the same propositions share a manager.
    """

    _registry: dict[tuple[str, ...], "Alphabet"] = {}

    def __init__(self, aps: Sequence[str], max_tracks: int = MAX_TRACKS):
        self.aps = _check_aps(aps)
        self.max_tracks = max_tracks
        self.bdd = _backend.BDD()
        self.bdd.configure(reordering=False)
        names = [self.name(t, i) for i in range(len(self.aps)) for t in range(max_tracks)]
        if names:
            self.bdd.declare(*names)
        self.true = self.bdd.true
        self.false = self.bdd.false
        self._prop_index = {p: i for i, p in enumerate(self.aps)}
        self._rename_cache: dict = {}
        self._minterm_cache: dict = {}
        self._letter_cache: dict = {}

    @classmethod
    def of(cls, aps: Sequence[str]) -> "Alphabet":
        key = tuple(aps)
        alpha = cls._registry.get(key)
        if alpha is None:
            alpha = cls._registry[key] = cls(key)
        return alpha

    def __repr__(self) -> str:
        return f"Alphabet({list(self.aps)})"

    # -- variables -----------------------------------------------------
    @staticmethod
    def name(track: int, prop_index: int) -> str:
        return f"t{track}p{prop_index}"

    def _track_ok(self, track: int) -> None:
        if not 0 <= track < self.max_tracks:
            raise AlphabetError(f"track {track} outside 0..{self.max_tracks - 1}")

    def prop_index(self, prop: str) -> int:
        try:
            return self._prop_index[prop]
        except KeyError:
            raise AlphabetError(f"unknown proposition {prop!r}") from None

    def lit(self, track: int, prop: str):
        self._track_ok(track)
        return self.bdd.var(self.name(track, self.prop_index(prop)))

    def track_names(self, track: int) -> list[str]:
        return [self.name(track, i) for i in range(len(self.aps))]

    # -- letters -------------------------------------------------------
    def letter_guard(self, track: int, props: Iterable[str]):
        """Guard satisfied exactly when ``track`` carries the set ``props``."""
        props = frozenset(props)
        key = (track, props)
        g = self._letter_cache.get(key)
        if g is None:
            for p in props:
                self.prop_index(p)
            g = self.true
            for p in self.aps:
                v = self.lit(track, p)
                g = g & (v if p in props else ~v)
            self._letter_cache[key] = g
        return g

    def minterm(self, letter: Letter):
        g = self._minterm_cache.get(letter)
        if g is None:
            g = self.true
            for t, props in enumerate(letter):
                g = g & self.letter_guard(t, props)
            self._minterm_cache[letter] = g
        return g

    def holds(self, guard, letter: Letter) -> bool:
        return (guard & self.minterm(letter)) != self.false

    def pick(self, guard, arity: int) -> Letter:
        """Lexicographically least letter satisfying ``guard`` (absent props first)."""
        if guard == self.false:
            raise AlphabetError("cannot pick a letter from an unsatisfiable guard")
        out = []
        g = guard
        for t in range(arity):
            present = []
            for p in self.aps:
                v = self.lit(t, p)
                lo = g & ~v
                if lo != self.false:
                    g = lo
                else:
                    g = g & v
                    present.append(p)
            out.append(frozenset(present))
        return tuple(out)

    def letters(self, arity: int) -> list[Letter]:
        """All letters of the ``arity``-track alphabet in lexicographic order."""
        singles = []
        n = len(self.aps)
        for bits in range(1 << n):
            singles.append(frozenset(self.aps[i] for i in range(n) if bits >> (n - 1 - i) & 1))
        out: list[Letter] = [()]
        for _ in range(arity):
            out = [w + (s,) for w in out for s in singles]
        return out

    # -- relations between tracks ---------------------------------------
    def eq(self, t1: int, t2: int, props: Iterable[str] | None = None):
        g = self.true
        for p in self.aps if props is None else props:
            g = g & self.bdd.apply("<->", self.lit(t1, p), self.lit(t2, p))
        return g

    def rename(self, guard, mapping: Mapping[int, int]):
        """Move track t to track mapping[t]; unmapped tracks stay in place."""
        moves = tuple(sorted((s, d) for s, d in mapping.items() if s != d))
        if not moves or guard == self.true or guard == self.false:
            return guard
        key = (guard, moves)
        r = self._rename_cache.get(key)
        if r is None:
            sub = {}
            for s, d in moves:
                self._track_ok(d)
                for i in range(len(self.aps)):
                    sub[self.name(s, i)] = self.name(d, i)
            r = self.bdd.let(sub, guard)
            self._rename_cache[key] = r
        return r

    def exist_tracks(self, guard, tracks: Iterable[int]):
        names = [n for t in tracks for n in self.track_names(t)]
        if not names:
            return guard
        return self.bdd.exist(names, guard)

    def support_tracks(self, guard) -> set[int]:
        return {int(v[1:].split("p")[0]) for v in self.bdd.support(guard)}

    def refine(self, guards: Sequence, within=None, keep_empty: bool = False):
        """Partition ``within`` (default: all letters) by which ``guards`` hold.

        Returns (class guard, indices of the guards containing the class).
        The class where no guard holds is included only with ``keep_empty``.
        Output order is deterministic.
        """
        start = self.true if within is None else within
        if start == self.false:
            return []
        by_guard: dict = {}
        for i, g in enumerate(guards):
            by_guard.setdefault(g, []).append(i)
        classes: list[tuple[object, frozenset[int]]] = [(start, frozenset())]
        for g, idx in by_guard.items():
            nxt = []
            for c, members in classes:
                inside = c & g
                if inside != self.false:
                    nxt.append((inside, members | frozenset(idx)))
                    outside = c & ~g
                    if outside != self.false:
                        nxt.append((outside, members))
                else:
                    nxt.append((c, members))
            classes = nxt
        merged: dict[frozenset[int], object] = {}
        for c, members in classes:
            if members or keep_empty:
                merged[members] = merged[members] | c if members in merged else c
        return sorted(((g, m) for m, g in merged.items()), key=lambda x: sorted(x[1]))

    def to_text(self, guard, arity: int) -> str:
        """Guard as a propositional formula over ``prop@track`` literals."""
        if guard == self.true:
            return "t"
        if guard == self.false:
            return "f"
        cubes = []
        for cube in self.bdd.pick_iter(guard):
            lits = []
            for v in sorted(cube, key=self._var_order):
                t, i = self._split(v)
                lits.append(("" if cube[v] else "!") + f"{self.aps[i]}@{t}")
            cubes.append(" & ".join(lits))
        return " | ".join(f"({c})" if len(cubes) > 1 else c for c in cubes)

    @staticmethod
    def _split(v: str) -> tuple[int, int]:
        t, i = v[1:].split("p")
        return int(t), int(i)

    def _var_order(self, v: str) -> tuple[int, int]:
        return self._split(v)
