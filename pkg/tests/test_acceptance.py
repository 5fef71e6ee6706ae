"""One test per acceptance criterion; the summary prints one PASS/FAIL line for each."""

from itertools import product

from sohyper.automata import LassoWord, accepts, language_included
from sohyper.encodings import (PROGRAMS, async_od_instances, ck_instances, mazurkiewicz_instance,
                               muddy_instance, regular_mc_instance, swap_step)
from sohyper.engine import CheckConfig, Method, Outcome, brute_force_check, verify
from sohyper.firstorder import base_env
from sohyper.ltl2nba import eval_ltl_on_lasso
from sohyper.secondorder import Iteration, park_check, under_approx
from sohyper.selftest import run_all

from util import lasso

SAT, UNSAT, UNKNOWN = Outcome.SAT, Outcome.UNSAT, Outcome.UNKNOWN

MUDDY = [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (4, 4)]


def test_criterion_1_muddy_children(criterion):
    with criterion(1, "muddy children matrix, Sat iff m >= n") as note:
        wrong = []
        for n, m in MUDDY:
            v = verify(*muddy_instance(n, m))
            if v.outcome is not (SAT if m >= n else UNSAT):
                wrong.append(f"({n},{m})={v.outcome.value}")
        note(f"{len(MUDDY)} instances")
        assert not wrong, wrong


def test_criterion_2_common_knowledge_converges(criterion):
    with criterion(2, "CK of a is Sat at precision 2n-1 with iter") as note:
        got = {}
        for n in (1, 2, 3, 10, 100):
            v = verify(*ck_instances(n)[1], CheckConfig(method=Method.ITER, max_precision=2 * n + 5))
            got[n] = (v.outcome, v.precision, v.method)
        note(", ".join(f"n={n}: {o.value}@{p}" for n, (o, p, _) in got.items()))
        assert got == {n: (SAT, 2 * n - 1, "iter") for n in got}


def test_criterion_3_next_a_refuted(criterion):
    with criterion(3, "CK of next-a on n=2 is Unsat with a fixpoint counterexample") as note:
        ts, ast = ck_instances(2)[0]
        v = verify(ts, ast)
        assert v.outcome is UNSAT
        p = v.witness.track(v.witness_vars.index("p"))
        r = v.witness.track(v.witness_vars.index("r"))
        note(f"p={p.show()} r={r.show()}")
        assert not eval_ltl_on_lasso(ast.body, v.witness, list(v.witness_vars))
        assert "a" not in r.letter(1)[0]
        so = ast.so_quantifiers[0]
        it = Iteration(so, base_env(ts), ["p"], ts.alphabet)
        assert accepts(it.get(3), LassoWord.zip([p, r]))
        # the a c^{n-1} d^w family is reached after 2n-1 steps
        c3 = under_approx(so, base_env(ts), 3, ["p"], ts.alphabet)
        assert accepts(c3, LassoWord.zip([lasso(["a", "a"], ["d"]), lasso(["a", "c"], ["d"])]))


def test_criterion_4_observational_determinism(criterion):
    expected = {"TSyn": (SAT, SAT), "TAsyn": (UNSAT, SAT), "Q1": (UNSAT, SAT)}
    with criterion(4, "observational determinism verdicts") as note:
        got = {}
        for prog in PROGRAMS:
            sync, asyn = async_od_instances(prog)
            got[prog] = (verify(*sync).outcome, verify(*asyn).outcome)
        note(", ".join(f"{k}: {a.value}/{b.value}" for k, (a, b) in got.items()))
        assert got == expected


def test_criterion_5_mazurkiewicz(criterion):
    with criterion(5, "swap closures: learn proves, iter diverges, bounded variants exact") as note:
        for v in ("SwapA", "SwapATwice"):
            ts, ast = mazurkiewicz_instance(v)
            learned = verify(ts, ast, CheckConfig(method=Method.LEARN, max_precision=20))
            assert (learned.outcome, learned.method) == (SAT, "learn"), v
            assert verify(ts, ast, CheckConfig(method=Method.ITER, max_precision=20)).outcome is UNKNOWN, v
        for n in (5, 15):
            for v, want in ((f"SwapA_{n}", SAT), (f"SwapAViolation_{n}", UNSAT)):
                r = verify(*mazurkiewicz_instance(v))
                assert (r.outcome, r.precision) == (want, n), (v, r.line())
        note("6 instances")


def corpus():
    for n in (1, 2):
        ck_next, ck_a = ck_instances(n)
        yield ck_next, n + 4
        yield ck_a, n + 4
    for prog in PROGRAMS:
        depth = 7 if prog == "Q1" else 5
        for inst in async_od_instances(prog):
            yield inst, depth
    yield mazurkiewicz_instance("SwapA"), 3
    yield mazurkiewicz_instance("SwapATwice"), 3
    for n in (1, 2):
        # the shifted trace {}^n {a} {}^w needs n + 2 letters
        yield mazurkiewicz_instance(f"SwapA_{n}"), n + 2
        yield mazurkiewicz_instance(f"SwapAViolation_{n}"), n + 2
    yield muddy_instance(2, 1), 4
    yield muddy_instance(2, 2), 4
    step = swap_step("q", "q2")
    yield regular_mc_instance(("a",), "a@q & X G !a@q", step, "F(a@q & X F a@q)", "rmc_swap"), 3
    yield regular_mc_instance(("a",), "a@q & !a@q", step, "true", "rmc_vacuous"), 3


def test_criterion_6_brute_force_agreement(criterion):
    with criterion(6, "engine agrees with brute force on the small corpus") as note:
        items = list(corpus())
        assert len(items) == 20
        disagree, unknown = [], []
        for inst, depth in items:
            v = verify(*inst, CheckConfig(method=Method.BOTH, max_precision=20))
            b = brute_force_check(*inst, depth)
            if v.outcome is UNKNOWN:
                unknown.append(inst.name)
            elif v.outcome is not b.outcome:
                disagree.append(f"{inst.name}: {v.outcome.value} vs {b.outcome.value}")
        note(f"{len(items)} instances, {len(disagree)} contradictions")
        assert not disagree, disagree
        assert not unknown, unknown


def test_criterion_7_automata_properties(criterion):
    with criterion(7, "automata property suites") as note:
        results = run_all()
        total = sum(r.seconds for r in results)
        for r in results:
            note(r.line())
        assert all(r.ok for r in results)
        assert total < 120


def benchmark_instances():
    for n in (1, 2, 3, 10):
        yield from ck_instances(n)
    for n, m in MUDDY:
        yield muddy_instance(n, m)
    for prog in PROGRAMS:
        yield from async_od_instances(prog)
    for v in ("SwapA", "SwapATwice", "SwapA_5", "SwapAViolation_5", "SwapA_15", "SwapAViolation_15"):
        yield mazurkiewicz_instance(v)


def test_criterion_8_approximation_soundness(criterion):
    with criterion(8, "lower within upper, Park checks, monotone iterates") as note:
        checked = chains = 0
        for method, inst in product((Method.ITER, Method.BOTH), benchmark_instances()):
            ts, ast = inst
            seen = []
            v = verify(ts, ast, CheckConfig(method=method, max_precision=20,
                                            observer=lambda n, so, env, b: seen.append((n, so, env, b))))
            last = {}
            for n, so, env, b in seen:
                bound = ast.bound_before(so)
                assert language_included(b.lower, b.upper) is None, (inst.name, n, so.var)
                if b.upper is not b.lower:
                    assert park_check(so, env, bound, b.upper) == (None, None), (inst.name, n, so.var)
                last[so.var] = (n, so, env, bound)
                checked += 1
            for n, so, env, bound in last.values():
                it = Iteration(so, env, bound, ts.alphabet)
                for m in range(n + 2):
                    assert language_included(it.get(m), it.get(m + 1)) is None, (inst.name, so.var, m)
                chains += 1
            assert v.outcome is not None
        note(f"{checked} bindings, {chains} chains")
