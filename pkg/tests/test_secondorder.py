from itertools import product
from math import lcm

import pytest

from sohyper.automata import (LassoWord, accepts, empty_nba, is_empty, language_included,
                              lasso_nba, universal_nba)
from sohyper.encodings import ck_instances, mazurkiewicz_instance, stutter_step
from sohyper.encodings.common import Instance, system_text
from sohyper.firstorder import base_env
from sohyper.secondorder import (Iteration, build_step, feed_counterexample, over_approx,
                                 park_check, under_approx)
from sohyper.system import lasso_traces

from util import lasso


def all_lassos(letters, max_total):
    for n in range(1, max_total + 1):
        for word in product(letters, repeat=n):
            for k in range(n):
                yield lasso(word[:k], word[k:]).canonical()


def stutter_instance():
    sys_text = system_text(["a"], [0], [({"a"}, [1]), (set(), [1])])
    text = (f"fix X min {{ forall q in S. true => q in X ; forall q in X. forall q2 in A. "
            f"{stutter_step('q', 'q2', ('a',))} => q2 in X }}. forall r in X. true")
    return Instance.from_text("stutter", sys_text, text)


def one_stutter_variants(w: LassoWord, horizon: int) -> set:
    """Duplicate one of the first ``horizon`` letters (hand oracle)."""
    out = set()
    letters = [w.letter(i) for i in range(horizon)]
    for i in range(horizon):
        pre = letters[:i + 1] + letters[i:]
        # the tail after position horizon-1 continues as in w
        rest = [w.letter(j) for j in range(horizon, len(w.prefix) + len(w.cycle))] if horizon < len(w.prefix) else []
        out.add(LassoWord(tuple(pre + rest), w.cycle).canonical())
    return out


def test_stutter_step_one_duplication():
    ts, ast = stutter_instance()
    so = ast.so_quantifiers[0]
    env = base_env(ts)
    seed = lasso(["a", ""], [""])
    step = build_step(so.constraints[1], env, lasso_nba(ts.alphabet, seed), [], so.var)
    assert accepts(step, lasso(["a", "a", ""], [""]))
    assert accepts(step, lasso(["a", "", ""], [""]))
    expected = one_stutter_variants(seed, 3)
    for w in all_lassos(["", "a"], 5):
        assert accepts(step, w) == (w in expected), w.show()


def test_observation_step(four_state):
    ts, ast = ck_instances(2)[1]
    so = ast.so_quantifiers[0]
    env = base_env(ts)
    cur = lasso_nba(ts.alphabet, lasso(["a", "a"], ["d"]))
    step = build_step(so.constraints[1], env, cur, [], so.var)
    assert accepts(step, lasso(["a", "b"], ["d"]))
    assert is_empty(build_step(so.constraints[1], env, empty_nba(ts.alphabet, 1), [], so.var)) is None


def _proj_equal(w1: LassoWord, w2: LassoWord, props) -> bool:
    horizon = max(len(w1.prefix), len(w2.prefix)) + lcm(len(w1.cycle), len(w2.cycle))
    pos1 = pos2 = 0
    for _ in range(horizon):
        if w1.letter(pos1)[0] & props != w2.letter(pos2)[0] & props:
            return False
        pos1, pos2 = w1.next_pos(pos1), w2.next_pos(pos2)
    return True


def ck_closure(ts, n: int, steps: int) -> list[set]:
    """Explicit iterates C_0..C_steps of the common-knowledge set (independent oracle)."""
    universe = lasso_traces(ts, 2 * n + 4)
    seed = lasso(["a"] * n, ["d"])
    views = [frozenset({"a", "d"}), frozenset({"c", "d"})]
    chain = [set()]
    for m in range(steps):
        cur = chain[-1]
        nxt = set(cur) | {seed}
        for t in cur:
            nxt |= {u for u in universe if any(_proj_equal(t, u, v) for v in views)}
        chain.append(nxt)
    return chain, universe


@pytest.mark.parametrize("n", [1, 2, 3])
def test_iterates_match_explicit_closure(four_state, n):
    ts, ast = ck_instances(n)[1]
    so = ast.so_quantifiers[0]
    it = Iteration(so, base_env(ts), [], ts.alphabet)
    chain, universe = ck_closure(ts, n, 2 * n + 1)
    for m, explicit in enumerate(chain):
        aut = it.get(m)
        for u in universe:
            assert accepts(aut, u) == (u in explicit), (m, u.show())


def test_under_approx_examples():
    ts, ast = ck_instances(2)[1]
    so = ast.so_quantifiers[0]
    env = base_env(ts)
    assert is_empty(under_approx(so, env, 0, [], ts.alphabet)) is None
    c3 = under_approx(so, env, 3, [], ts.alphabet)
    for w in (["a", "a"], ["a", "b"], ["a", "c"]):
        assert accepts(c3, lasso(w, ["d"]))
    # the refuting trace of the next-a variant: a c^{n-1} d^w
    ts2, ast2 = ck_instances(2)[0]
    so2 = ast2.so_quantifiers[0]
    c = under_approx(so2, base_env(ts2), 3, ["p"], ts2.alphabet)
    assert accepts(c, LassoWord.zip([lasso(["a", "a"], ["d"]), lasso(["a", "c"], ["d"])]))


def test_monotone_chain():
    for inst in (ck_instances(3)[1], mazurkiewicz_instance("SwapA")):
        ts, ast = inst
        so = ast.so_quantifiers[0]
        it = Iteration(so, base_env(ts), ast.bound_before(so), ts.alphabet)
        for m in range(6):
            assert language_included(it.get(m), it.get(m + 1)) is None


def _swap_setup():
    ts, ast = mazurkiewicz_instance("SwapA")
    so = ast.so_quantifiers[0]
    env = base_env(ts)
    it = Iteration(so, env, [], ts.alphabet)
    return ts, so, env, it


def test_over_approx_budget_zero_is_universal():
    ts, so, env, it = _swap_setup()
    b, _ = over_approx(so, env, 0, [], ts.alphabet, members=it.get)
    assert is_empty(b) is not None and b.num_states == 1


def test_learned_invariant_for_swaps():
    ts, so, env, it = _swap_setup()
    b, state = over_approx(so, env, 1, [], ts.alphabet, members=it.get)
    # first hypothesis is too coarse; the refuting trace {a}{a}{}^w is fed back
    bad = lasso(["a", "a"], [""])
    state, genuine = feed_counterexample(state, bad, it.get(4))
    assert not genuine
    b, state = over_approx(so, env, 2, [], ts.alphabet, state, members=it.get)
    assert park_check(so, env, [], b) == (None, None)
    assert not accepts(b, bad)
    for k in range(6):
        assert accepts(b, lasso([""] * k + ["a"], [""]))
    for k in range(4):
        assert language_included(it.get(k), b) is None


def test_feed_counterexample_cases():
    ts, so, env, it = _swap_setup()
    _, state = over_approx(so, env, 1, [], ts.alphabet, members=it.get)
    member = lasso(["", "a"], [""])
    assert feed_counterexample(state, member, it.get(4))[1]
    before = list(state.table.E)
    feed_counterexample(state, lasso(["a", "a"], [""]), it.get(4))
    assert state.table.E != before
    assert not state.hypothesis.accepts(state.encode(lasso(["a", "a"], [""]), 2))
    after = list(state.table.E)
    feed_counterexample(state, lasso(["a", "a", "a"], [""]), it.get(4))
    assert state.table.E == after


def test_park_rejects_non_inductive():
    ts, so, env, it = _swap_setup()
    seed, ind = park_check(so, env, [], it.get(2))
    assert seed is None and ind is not None
    assert park_check(so, env, [], empty_nba(ts.alphabet, 1))[0] is not None
    assert park_check(so, env, [], universal_nba(ts.alphabet, 1)) == (None, None)


def test_support_letters_and_late_letters():
    from sohyper.secondorder.learner import Dfa, support_letters

    ts, so, env, it = _swap_setup()
    letters = ts.alphabet.letters(1)
    assert support_letters(it.get(1), letters) == letters
    assert support_letters(empty_nba(ts.alphabet, 1), letters) == []
    dfa = Dfa([[0]], [True])
    assert dfa.accepts((0, 0)) and dfa.first_rejected((0, 0)) is None
    # letter 1 did not exist when the hypothesis was built
    assert not dfa.accepts((0, 1)) and dfa.first_rejected((0, 1)) == 2
