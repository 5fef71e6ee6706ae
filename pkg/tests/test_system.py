import random

import pytest

from sohyper.automata import accepts, universal_nba
from sohyper.guards import Alphabet
from sohyper.randomgen import random_lasso
from sohyper.system import (SystemParseError, all_traces_system, lasso_traces, parse_system,
                            system_to_nba)

from util import lasso

LOOP = "aps: a\ninit: 0\nstates:\n0 {a} -> 0\n"


def test_one_state_loop():
    ts = parse_system(LOOP)
    aut = system_to_nba(ts)
    assert accepts(aut, lasso([], ["a"]))
    assert not accepts(aut, lasso([], [""]))
    assert aut.num_states == 1


def test_four_state(four_state):
    assert four_state.num_states == 4
    aut = system_to_nba(four_state)
    assert aut.num_states == 4
    assert accepts(aut, lasso(["a", "a", "d"], ["d"]))
    assert not accepts(aut, lasso(["a", "d"], ["c"]))


def test_alternation_initial_states():
    one = parse_system("aps: a\ninit: 0\nstates:\n0 {a} -> 1\n1 {} -> 0\n")
    both = parse_system("aps: a\ninit: 0 1\nstates:\n0 {a} -> 1\n1 {} -> 0\n")
    w1, w2 = lasso([], ["a", ""]), lasso([], ["", "a"])
    assert accepts(system_to_nba(one), w1) and not accepts(system_to_nba(one), w2)
    assert accepts(system_to_nba(both), w1) and accepts(system_to_nba(both), w2)


@pytest.mark.parametrize("text, msg", [
    ("aps: a\ninit: 0\nstates:\n0 {a} -> 7\n", "dangling successor"),
    ("aps: a\ninit: 0\nstates:\n0 {a} ->\n", "no successors"),
    ("aps: a\ninit:\nstates:\n0 {a} -> 0\n", "empty initial"),
    ("aps: a\ninit: 0\nstates:\n0 {z} -> 0\n", "unknown propositions"),
    ("aps: a\ninit: 0\nstates:\n1 {a} -> 0\n", "dense"),
    ("init: 0\n", "expected 'aps:'"),
])
def test_parse_errors(text, msg):
    with pytest.raises(SystemParseError, match=msg):
        parse_system(text)


def test_roundtrip(four_state):
    assert parse_system(four_state.to_text()) == four_state


def test_traces_accepted_and_others_rejected(four_state):
    aut = system_to_nba(four_state)
    traces = lasso_traces(four_state, 6)
    assert traces
    for w in traces:
        assert accepts(aut, w)
    rng = random.Random(1)
    rejected = 0
    while rejected < 200:
        w = random_lasso(rng, four_state.aps, 1, max_prefix=4, max_cycle=2).canonical()
        if w in traces:
            continue
        labels_ok = all(len(w.letter(i)[0]) == 1 for i in range(len(w)))
        if labels_ok:
            # could be a trace with a longer path; confirm with a deeper enumeration
            if w in lasso_traces(four_state, 10):
                continue
        assert not accepts(aut, w)
        rejected += 1


def test_universal():
    a = Alphabet.of(("a",))
    top = universal_nba(a)
    assert accepts(top, lasso([], ["a"])) and accepts(top, lasso([], [""]))
    ts = all_traces_system(("a",))
    assert accepts(system_to_nba(ts), lasso(["a"], ["", "a"]))
