"""Finite transition systems and their trace automata.

File format::

    aps: a b c
    init: 0
    states:
    0 {a} -> 0 1
    1 {} -> 1

State indices are dense and 0-based; every state needs a successor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .automata import NBA, universal_nba
from .guards import Alphabet


class SystemParseError(ValueError):
    pass


@dataclass(frozen=True)
class TransitionSystem:
    aps: tuple
    initial: tuple
    labels: tuple  # frozenset of props per state
    succ: tuple  # tuple of successor indices per state

    def __post_init__(self):
        n = len(self.labels)
        if not self.initial:
            raise SystemParseError("empty initial set")
        for q in self.initial:
            if not 0 <= q < n:
                raise SystemParseError(f"initial state {q} does not exist")
        for q, ss in enumerate(self.succ):
            if not ss:
                raise SystemParseError(f"state {q} has no successors")
            for d in ss:
                if not 0 <= d < n:
                    raise SystemParseError(f"state {q} has dangling successor {d}")
        for q, lab in enumerate(self.labels):
            extra = set(lab) - set(self.aps)
            if extra:
                raise SystemParseError(f"state {q} uses undeclared propositions {sorted(extra)}")

    @property
    def num_states(self) -> int:
        return len(self.labels)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.of(self.aps)

    def to_text(self) -> str:
        lines = ["aps: " + " ".join(self.aps), "init: " + " ".join(map(str, self.initial)), "states:"]
        for q, (lab, ss) in enumerate(zip(self.labels, self.succ)):
            props = " ".join(p for p in self.aps if p in lab)
            lines.append(f"{q} {{{props}}} -> " + " ".join(map(str, ss)))
        return "\n".join(lines) + "\n"


_STATE = re.compile(r"^(\d+)\s*\{([^}]*)\}\s*->\s*(.*)$")


def parse_system(text: str) -> TransitionSystem:
    lines = []
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((num, line))

    def expect(prefix: str):
        if not lines or not lines[0][1].startswith(prefix):
            where = lines[0][0] if lines else "end"
            raise SystemParseError(f"line {where}: expected '{prefix}'")
        num, line = lines.pop(0)
        return num, line[len(prefix):].split()

    _, aps = expect("aps:")
    if not aps:
        raise SystemParseError("no propositions declared")
    if len(set(aps)) != len(aps):
        raise SystemParseError("duplicate propositions")
    num, init = expect("init:")
    if not init:
        raise SystemParseError("empty initial set")
    try:
        initial = tuple(int(x) for x in init)
    except ValueError:
        raise SystemParseError(f"line {num}: initial states must be numbers") from None
    expect("states:")
    labels, succ = [], []
    for num, line in lines:
        m = _STATE.match(line)
        if m is None:
            raise SystemParseError(f"line {num}: expected 'N {{props}} -> N ...'")
        if int(m.group(1)) != len(labels):
            raise SystemParseError(f"line {num}: state indices must be dense, expected {len(labels)}")
        props = m.group(2).split()
        unknown = set(props) - set(aps)
        if unknown:
            raise SystemParseError(f"line {num}: unknown propositions {sorted(unknown)}")
        try:
            targets = tuple(int(x) for x in m.group(3).split())
        except ValueError:
            raise SystemParseError(f"line {num}: successors must be numbers") from None
        if not targets:
            raise SystemParseError(f"line {num}: state {len(labels)} has no successors")
        labels.append(frozenset(props))
        succ.append(targets)
    return TransitionSystem(tuple(aps), initial, tuple(labels), tuple(succ))


def system_to_nba(ts: TransitionSystem) -> NBA:
    """One automaton state per system state; reading the label moves to a successor."""
    alpha = ts.alphabet
    trans = [(q, alpha.letter_guard(0, ts.labels[q]), d) for q in range(ts.num_states) for d in ts.succ[q]]
    return NBA.build(alpha, 1, ts.num_states, ts.initial, range(ts.num_states), trans)


def all_traces_system(aps) -> TransitionSystem:
    """System whose traces are all words over 2^aps (one state per letter)."""
    letters = Alphabet.of(aps).letters(1)
    n = len(letters)
    return TransitionSystem(tuple(aps), tuple(range(n)), tuple(x[0] for x in letters),
                            tuple(tuple(range(n)) for _ in range(n)))


def universal_trace_nba(aps) -> NBA:
    return universal_nba(Alphabet.of(aps), 1)


def lasso_traces(ts: TransitionSystem, max_len: int):
    """Canonical lasso traces of paths with prefix + cycle length at most ``max_len``."""
    from .automata import LassoWord

    out = set()
    for q0 in ts.initial:
        stack = [(q0, (q0,))]
        while stack:
            q, path = stack.pop()
            # close a cycle back to any earlier position
            for d in ts.succ[q]:
                for k, s in enumerate(path):
                    if s == d:
                        word = [(ts.labels[x],) for x in path]
                        out.add(LassoWord(tuple(word[:k]), tuple(word[k:])).canonical())
                if len(path) < max_len:
                    stack.append((d, path + (d,)))
    return out
