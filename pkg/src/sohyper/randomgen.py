"""Seeded random generators used by the property tests.

Shared by the test-suite and the ``selftest`` command.
"""

from __future__ import annotations

import random

from .automata import NBA, LassoWord
from .formula.ast import (FALSE, TRUE, And, Atom, Eventually, Globally, Iff, Implies, Next, Not,
                          Or, Until, WeakUntil)
from .guards import Alphabet


def random_letter(rng: random.Random, aps, arity: int):
    return tuple(frozenset(p for p in aps if rng.random() < 0.5) for _ in range(arity))


def random_lasso(rng: random.Random, aps, arity: int, max_prefix: int = 3, max_cycle: int = 3) -> LassoWord:
    prefix = tuple(random_letter(rng, aps, arity) for _ in range(rng.randint(0, max_prefix)))
    cycle = tuple(random_letter(rng, aps, arity) for _ in range(rng.randint(1, max_cycle)))
    return LassoWord(prefix, cycle)


def random_ltl(rng: random.Random, aps, tvars, depth: int):
    if depth <= 1 or rng.random() < 0.2:
        r = rng.random()
        if r < 0.06:
            return TRUE
        if r < 0.12:
            return FALSE
        return Atom(rng.choice(list(aps)), rng.choice(list(tvars)))
    unary = [Not, Next, Eventually, Globally]
    binary = [And, Or, Implies, Iff, Until, WeakUntil]
    if rng.random() < 0.4:
        return rng.choice(unary)(random_ltl(rng, aps, tvars, depth - 1))
    op = rng.choice(binary)
    return op(random_ltl(rng, aps, tvars, depth - 1), random_ltl(rng, aps, tvars, depth - 1))


def random_nba(rng: random.Random, alphabet: Alphabet, arity: int, n_states: int = 3,
               density: float = 0.4) -> NBA:
    """Small random automaton; guards are random literals or cubes."""
    lits = [(t, p) for t in range(arity) for p in alphabet.aps]
    trans = []
    for s in range(n_states):
        for d in range(n_states):
            if rng.random() < density:
                g = alphabet.true
                for t, p in lits:
                    r = rng.random()
                    if r < 0.3:
                        g = g & alphabet.lit(t, p)
                    elif r < 0.6:
                        g = g & ~alphabet.lit(t, p)
                trans.append((s, g, d))
    init = [q for q in range(n_states) if rng.random() < 0.4] or [0]
    acc = [q for q in range(n_states) if rng.random() < 0.4]
    return NBA.build(alphabet, arity, n_states, init, acc, trans)
