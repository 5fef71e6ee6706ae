"""Randomized property suites shared by the test-suite and ``sohyper selftest``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .automata import accepts, complement, intersect, is_empty, union
from .guards import Alphabet
from .ltl2nba import eval_ltl_on_lasso, ltl_to_nba
from .randomgen import random_lasso, random_ltl, random_nba


@dataclass
class SuiteResult:
    name: str
    probes: int
    violations: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"{self.name}: {self.probes} probes, {status} ({self.seconds:.1f}s)"


def _timed(fn):
    def run(*args, **kwargs) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _setting(rng: random.Random):
    aps = ("a", "b")[: rng.randint(1, 2)]
    return Alphabet.of(aps), aps, rng.randint(1, 2)


@_timed
def complement_xor(probes: int = 500, seed: int = 1) -> SuiteResult:
    """Every lasso is in exactly one of L(A) and L(complement(A))."""
    rng = random.Random(seed)
    res = SuiteResult("complement-xor", probes)
    for i in range(probes):
        alpha, aps, arity = _setting(rng)
        a = random_nba(rng, alpha, arity, n_states=rng.randint(1, 4))
        c = complement(a)
        for _ in range(3):
            w = random_lasso(rng, aps, arity)
            if accepts(a, w) == accepts(c, w):
                res.violations.append((i, w.show()))
    return res


@_timed
def de_morgan(probes: int = 200, seed: int = 2) -> SuiteResult:
    """complement(A | B) and complement(A) & complement(B) agree on random lassos."""
    rng = random.Random(seed)
    res = SuiteResult("de-morgan", probes)
    for i in range(probes):
        alpha, aps, arity = _setting(rng)
        a = random_nba(rng, alpha, arity, n_states=rng.randint(1, 3))
        b = random_nba(rng, alpha, arity, n_states=rng.randint(1, 3))
        left = complement(union(a, b))
        right = intersect(complement(a), complement(b))
        for _ in range(3):
            w = random_lasso(rng, aps, arity)
            if accepts(left, w) != accepts(right, w):
                res.violations.append((i, w.show()))
    return res


@_timed
def witness_replay(probes: int = 300, seed: int = 3) -> SuiteResult:
    """Emptiness witnesses are accepted by the automaton that produced them."""
    rng = random.Random(seed)
    res = SuiteResult("witness-replay", probes)
    for i in range(probes):
        alpha, _, arity = _setting(rng)
        a = random_nba(rng, alpha, arity, n_states=rng.randint(1, 4))
        for aut in (a, complement(a)):
            w = is_empty(aut)
            if w is not None and not accepts(aut, w):
                res.violations.append((i, w.show()))
    return res


@_timed
def ltl_agreement(probes: int = 1000, seed: int = 4, depth: int = 5) -> SuiteResult:
    """The translated automaton accepts a lasso iff the direct evaluator says so."""
    rng = random.Random(seed)
    res = SuiteResult("ltl-nba-agreement", probes)
    for i in range(probes):
        alpha, aps, arity = _setting(rng)
        tvars = ("p", "q")[:arity]
        f = random_ltl(rng, aps, tvars, depth)
        w = random_lasso(rng, aps, arity)
        if accepts(ltl_to_nba(f, tvars, alpha), w) != eval_ltl_on_lasso(f, w, tvars):
            res.violations.append((i, f, w.show()))
    return res


SUITES = (complement_xor, de_morgan, witness_replay, ltl_agreement)


def run_all(scale: float = 1.0) -> list[SuiteResult]:
    defaults = {"complement_xor": 500, "de_morgan": 200, "witness_replay": 300, "ltl_agreement": 1000}
    return [s(probes=max(1, int(defaults[s.__name__] * scale))) for s in SUITES]
