import random

import pytest

from sohyper.automata import (accepts, complement, empty_nba, is_empty, project_exists,
                              universal_nba)
from sohyper.bruteforce import brute_force_check
from sohyper.encodings import async_od_instances, ck_instances
from sohyper.engine import Outcome
from sohyper.firstorder import Mode, SoBinding, base_env, e_product, eliminate_prefix, run_chain, u_product
from sohyper.formula import parse_formula, parse_ltl
from sohyper.formula.printer import ltl_to_text
from sohyper.guards import Alphabet
from sohyper.ltl2nba import ltl_to_nba
from sohyper.randomgen import random_ltl
from sohyper.secondorder import Iteration
from sohyper.system import parse_system, system_to_nba

from util import lasso

A = Alphabet.of(("a",))


def universal_lang(a):
    return is_empty(complement(a)) is None


def test_e_product_examples():
    rng_body = ltl_to_nba(parse_ltl("G (a@p -> X a@q)", A.aps), ["p", "q"], A)
    proj = project_exists(rng_body, 1)
    ep = e_product(rng_body, universal_nba(A, 1))
    for w in [lasso([], ["a"]), lasso(["a"], [""]), lasso([], ["", "a"])]:
        assert accepts(ep, w) == accepts(proj, w)
    assert is_empty(e_product(rng_body, empty_nba(A, 1))) is None
    loop = system_to_nba(parse_system("aps: a\ninit: 0\nstates:\n0 {a} -> 0\n"))
    eq = ltl_to_nba(parse_ltl("G (a@p <-> a@q)", A.aps), ["p", "q"], A)
    res = e_product(eq, loop)
    assert res.arity == 1
    assert accepts(res, lasso([], ["a"]))
    assert not accepts(res, lasso(["a"], [""]))
    assert not accepts(res, lasso([], [""]))


def test_u_product_examples():
    body = ltl_to_nba(parse_ltl("G (a@p -> X a@q)", A.aps), ["p", "q"], A)
    assert universal_lang(u_product(body, empty_nba(A, 1)))
    assert universal_lang(u_product(universal_nba(A, 2), system_to_nba(parse_system(
        "aps: a\ninit: 0\nstates:\n0 {a} -> 0\n"))))


def test_u_product_async_od():
    inst = async_od_instances("TAsyn")[0]
    o = inst.system.alphabet
    sysaut = system_to_nba(inst.system)
    body = ltl_to_nba(parse_ltl("G (o@p1 <-> o@p2)", o.aps), ["p1", "p2"], o)
    inner = u_product(body, sysaut)
    assert inner.arity == 1
    outer = u_product(inner, sysaut)
    assert outer.arity == 0 and is_empty(outer) is None


def finite_system(rng):
    """A DAG of states ending in self-loops, so it has finitely many traces."""
    n = rng.randint(2, 4)
    lines = []
    for i in range(n):
        label = "a" if rng.random() < 0.5 else ""
        later = [j for j in range(i + 1, n) if rng.random() < 0.5]
        succ = later or [i]
        if i == n - 1:
            succ = [i]
        lines.append(f"{i} {{{label}}} -> {' '.join(map(str, succ))}")
    return parse_system(f"aps: a\ninit: 0 {n - 1}\nstates:\n" + "\n".join(lines) + "\n")


PREFIXES = ["forall p in S. forall q in S.", "exists p in S. forall q in S.",
            "forall p in S. exists q in S.", "exists p in S. exists q in S.",
            "forall p in S. exists q in A."]


@pytest.mark.parametrize("seed", range(40))
def test_chain_decides_plain_hyperltl(seed):
    rng = random.Random(seed)
    ts = finite_system(rng)
    body = random_ltl(rng, ("a",), ("p", "q"), 4)
    text = f"{rng.choice(PREFIXES)} {ltl_to_text(body)}"
    ast = parse_formula(text, ts.aps)
    env = base_env(ts)
    prove = run_chain(ast, env, Mode.PROVE)
    refute = run_chain(ast, env, Mode.REFUTE)
    assert prove.nonempty != refute.nonempty
    truth = brute_force_check(ts, ast, 4).outcome is Outcome.SAT
    assert prove.nonempty == truth, text


def test_eliminate_prefix_trivial():
    ts = parse_system("aps: a\ninit: 0\nstates:\n0 {a} -> 0\n")
    ast = parse_formula("forall p in S. true", ts.aps)
    assert is_empty(eliminate_prefix(ast, base_env(ts), Mode.PROVE)) is not None


def _env_with(ts, ast, lower, upper):
    env = base_env(ts)
    so = ast.so_quantifiers[0]
    bound = ast.bound_before(so)
    env[so.var] = SoBinding(so.ref, len(bound), lower, upper)
    return env


def test_ck_next_a_refuted_from_lower_bound():
    # with a bound trace the chain of function automata never stabilizes (a^k d^w needs
    # about 2k steps), so the refutation has to come from an iterate
    ts, ast = ck_instances(2)[0]
    so = ast.so_quantifiers[0]
    it = Iteration(so, base_env(ts), ast.bound_before(so), ts.alphabet)
    top = universal_nba(ts.alphabet, 2)
    env = _env_with(ts, ast, it.get(2), top)
    assert not run_chain(ast, env, Mode.PROVE).nonempty
    res = run_chain(ast, env, Mode.REFUTE)
    assert res.nonempty
    # duality on an exact (pinned) binding
    pinned = it.get(3)
    env = _env_with(ts, ast, pinned, pinned)
    assert run_chain(ast, env, Mode.PROVE).nonempty != run_chain(ast, env, Mode.REFUTE).nonempty


def test_ck_of_a_after_iterations():
    ts, ast = ck_instances(2)[1]
    so = ast.so_quantifiers[0]
    it = Iteration(so, base_env(ts), [], ts.alphabet)
    # precision N uses the iterate C_{N+1}; for n = 2 the fixpoint is reached at precision 3
    assert it.is_stable(3) and not it.is_stable(2)
    exact = it.get(4)
    assert run_chain(ast, _env_with(ts, ast, exact, exact), Mode.PROVE).nonempty
    assert not run_chain(ast, _env_with(ts, ast, it.get(3), universal_nba(ts.alphabet, 1)), Mode.PROVE).nonempty
