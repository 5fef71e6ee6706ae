"""Active learning of safety invariants with an observation table."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..automata import NBA, LassoWord, trim


class ObservationTable:
    """Classic observation table; counterexamples add all their suffixes as experiments."""

    def __init__(self, letters: list, mq):
        self.letters = letters  # shared with the learner; may grow between queries
        self.mq = mq
        self.S: list[tuple] = [()]
        self.E: list[tuple] = [()]

    @property
    def n(self) -> int:
        return len(self.letters)

    def row(self, s: tuple) -> tuple:
        return tuple(self.mq(s + e) for e in self.E)

    def close(self) -> None:
        while True:
            rows = {self.row(s) for s in self.S}
            missing = None
            for s in self.S:
                for a in range(self.n):
                    t = s + (a,)
                    r = self.row(t)
                    if r not in rows:
                        missing = t
                        break
                if missing:
                    break
            if missing is None:
                return
            self.S.append(missing)

    def add_counterexample(self, word: tuple) -> None:
        for k in range(len(word)):
            suffix = word[k:]
            if suffix not in self.E:
                self.E.append(suffix)

    def hypothesis(self) -> "Dfa":
        self.close()
        index: dict[tuple, int] = {}
        reps = []
        for s in self.S:
            r = self.row(s)
            if r not in index:
                index[r] = len(reps)
                reps.append(s)
        delta = [[index[self.row(s + (a,))] for a in range(self.n)] for s in reps]
        accepting = [self.mq(s) for s in reps]
        return Dfa(delta, accepting)


@dataclass
class Dfa:
    """Letters added after the hypothesis was built lead to rejection."""

    delta: list
    accepting: list

    def accepts(self, word) -> bool:
        q = 0
        for a in word:
            if a >= len(self.delta[q]):
                return False
            q = self.delta[q][a]
        return self.accepting[q]

    def first_rejected(self, word) -> int | None:
        """Length of the shortest rejected prefix of ``word``, if any."""
        q = 0
        if not self.accepting[q]:
            return 0
        for k, a in enumerate(word):
            if a >= len(self.delta[q]):
                return k + 1
            q = self.delta[q][a]
            if not self.accepting[q]:
                return k + 1
        return None


def dfa_to_safety_nba(dfa: Dfa, letters, alphabet, arity: int) -> NBA:
    """The safety language: words all of whose prefixes the DFA accepts."""
    if not dfa.accepting[0]:
        return NBA.build(alphabet, arity, 0, (), (), ())
    trans = []
    for q, row in enumerate(dfa.delta):
        if not dfa.accepting[q]:
            continue
        for a, d in enumerate(row):
            if dfa.accepting[d]:
                trans.append((q, alphabet.minterm(letters[a]), d))
    n = len(dfa.delta)
    return trim(NBA.build(alphabet, arity, n, (0,), range(n), trans))


class PrefixOracle:
    """Is a finite word a prefix of some word accepted by an automaton?"""

    def __init__(self, a: NBA, letters):
        self.a = trim(a)
        self.letters = letters
        self.cache: dict[tuple, frozenset] = {(): frozenset(self.a.initial)}

    def states(self, word: tuple) -> frozenset:
        got = self.cache.get(word)
        if got is None:
            prev = self.states(word[:-1])
            m = self.a.alphabet.minterm(self.letters[word[-1]])
            false = self.a.alphabet.false
            got = frozenset(d for q in prev for d, g in self.a.edges[q] if (g & m) != false)
            self.cache[word] = got
        return got

    def __call__(self, word: tuple) -> bool:
        return bool(self.states(word))


def support_letters(a: NBA, candidates) -> list:
    """Letters of ``candidates`` readable on some edge of the trimmed automaton."""
    a = trim(a)
    guards = [g for es in a.edges for _, g in es]
    false = a.alphabet.false
    return [x for x in candidates if any((g & a.alphabet.minterm(x)) != false for g in guards)]


@dataclass
class LearnerState:
    """Everything the learner keeps between rounds for one set variable.

    Only letters seen so far (in iterates or counterexamples) get table
    columns; every other letter leads to rejection in the hypothesis, which
    Park's checks then either confirm or refute with a word naming it.
    """

    arity: int
    letters: list = field(default_factory=list)
    oracle: PrefixOracle | None = None
    depth: int = -1
    positives: list = field(default_factory=list)  # finite words known to be member prefixes
    table: ObservationTable | None = None
    hypothesis: Dfa | None = None
    queries: int = 0
    _index: dict = field(default_factory=dict, repr=False)
    _memo: dict = field(default_factory=dict, repr=False)

    def add_letters(self, letters) -> None:
        for x in letters:
            if x not in self._index:
                self._index[x] = len(self.letters)
                self.letters.append(x)

    def encode(self, w: LassoWord, length: int) -> tuple:
        self.add_letters(w.letter(i) for i in range(length))
        return tuple(self._index[w.letter(i)] for i in range(length))

    def set_oracle(self, oracle: PrefixOracle) -> None:
        self.oracle = oracle
        self._memo.clear()

    def add_positive(self, word: tuple) -> None:
        self.positives.append(word)
        self._memo.clear()

    def mq(self, word: tuple) -> bool:
        got = self._memo.get(word)
        if got is None:
            got = any(len(word) <= len(p) and p[: len(word)] == word for p in self.positives) \
                or self.oracle(word)
            self._memo[word] = got
        return got
