import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sohyper.bruteforce import brute_force_check
from sohyper.encodings import (PROGRAMS, async_od_instances, ck_instances, mazurkiewicz_instance,
                               muddy_instance)
from sohyper.engine import Outcome
from sohyper.formula import (Atom, FixConstraint, FixMode, FoQuantifier, FormulaError,
                             FormulaSyntaxError, Globally, Quant, SoKind, SoQuantifier,
                             desugar_membership, parse_formula, parse_ltl, parse_raw, to_text,
                             validate_fragment)
from sohyper.formula.ast import Member
from sohyper.formula.printer import ltl_to_text
from sohyper.randomgen import random_ltl
from sohyper.system import parse_system

ABCD = ("a", "b", "c", "d")


def test_minimal_formula():
    ast = parse_formula("forall p in S. G (a@p)", ("a",))
    (q,) = ast.prefix
    assert q == FoQuantifier(Quant.FORALL, "p", q.domain) and q.domain.kind is SoKind.SYSTEM
    assert ast.body == Globally(Atom("a", "p"))


def test_ck_formula_shape():
    ast = ck_instances(2)[0].formula
    fo, so, inner = ast.prefix
    assert isinstance(fo, FoQuantifier) and isinstance(so, SoQuantifier) and isinstance(inner, FoQuantifier)
    assert so.mode is FixMode.LEAST and len(so.constraints) == 2
    seed, obs = so.constraints
    assert len(seed.dotted) == 1 and seed.dotted[0][1].kind is SoKind.ALL
    assert [d.label for _, d in obs.dotted] == ["X", "S"] and obs.target == 2
    assert inner.domain.name == "X" and inner.quant is Quant.FORALL
    assert validate_fragment(ast) == []


def test_unquantified_set_variable():
    with pytest.raises(FormulaError, match="second-order variable used before quantification"):
        parse_formula("exists p in X. a@p", ("a",))


def test_unbound_trace_and_unknown_prop():
    with pytest.raises(FormulaError, match="unbound trace variable"):
        parse_formula("forall p in S. a@q", ("a",))
    with pytest.raises(FormulaError):
        parse_formula("forall p in S. z@p", ("a",))


def test_syntax_error_has_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula("forall p in S.\n  G (a@p", ("a",))
    assert info.value.line == 2


def test_greatest_rejected():
    text = "fix X max { forall q in S. true => q in X }. forall r in X. a@r"
    with pytest.raises(FormulaError, match="unsupported: ⋏"):
        parse_formula(text, ("a",))
    diags = validate_fragment(parse_formula(text, ("a",), check_fragment=False))
    assert len(diags) == 1 and "⋏" in diags[0]


def test_membership_in_step_rejected():
    raw = parse_raw("forall p in S. fix X min { forall q in S. q in X => q in X }. forall r in X. a@r", ("a",))
    assert any("quantifier" in d for d in validate_fragment(raw))


def test_body_membership_desugars_by_polarity():
    ast = parse_formula("forall p in S. fix X min { p in X }. forall q in S. q in X", ("a",))
    last = ast.prefix[-1]
    assert last.quant is Quant.EXISTS and last.domain.name == "X"
    neg = parse_formula("forall p in S. fix X min { p in X }. forall q in S. !(q in X)", ("a",))
    assert neg.prefix[-1].quant is Quant.FORALL
    assert not any(isinstance(m, Member) for m in _walk(ast.body))


def _walk(f):
    from sohyper.formula import walk
    return walk(f)


def test_membership_under_temporal_rejected():
    with pytest.raises(FormulaError, match="membership atom under a temporal operator"):
        parse_formula("forall p in S. fix X min { p in X }. G (p in X)", ("a",))
    with pytest.raises(FormulaError, match="polarity"):
        parse_formula("forall p in S. fix X min { p in X }. (p in X) <-> a@p", ("a",))


def test_seed_desugared_form():
    ast = parse_formula("forall p in S. fix X min { p in X }. forall r in X. a@r", ("a",))
    (c,) = ast.so_quantifiers[0].constraints
    assert isinstance(c, FixConstraint) and c.target == 1 and c.dotted[0][1].kind is SoKind.ALL


TWO = parse_system("aps: a\ninit: 0 1\nstates:\n0 {a} -> 0\n1 {} -> 1\n")
ONE = parse_system("aps: a\ninit: 0\nstates:\n0 {a} -> 0\n")


@pytest.mark.parametrize("text, system, expected", [
    # the seeded set is exactly {p}
    ("forall p in S. fix X min { p in X }. forall r in X. G (a@r <-> a@p)", TWO, True),
    ("forall p in S. fix X min { p in X }. exists r in X. !G (a@r <-> a@p)", TWO, False),
    # "every system trace is in {p}" holds only with a single trace
    ("forall p in S. fix X min { p in X }. forall q in S. q in X", TWO, False),
    ("forall p in S. fix X min { p in X }. forall q in S. q in X", ONE, True),
    ("forall p in S. fix X min { p in X }. exists q in S. !(q in X)", TWO, True),
])
def test_sugar_semantics_by_enumeration(text, system, expected):
    ast = parse_formula(text, system.aps)
    v = brute_force_check(system, ast, 2)
    assert (v.outcome is Outcome.SAT) == expected


def generated():
    yield from ck_instances(2)
    yield muddy_instance(2, 2)
    for p in PROGRAMS:
        yield from async_od_instances(p)
    for v in ("SwapA", "SwapATwice", "SwapA_3", "SwapAViolation_3"):
        yield mazurkiewicz_instance(v)


@pytest.mark.parametrize("inst", list(generated()), ids=lambda i: i.name)
def test_roundtrip_and_fragment(inst):
    ast = inst.formula
    assert validate_fragment(ast) == []
    again = parse_formula(to_text(ast), ast.aps)
    assert again == ast


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_ltl_print_parse_roundtrip(seed):
    rng = random.Random(seed)
    f = random_ltl(rng, ("a", "b"), ("p", "q"), 5)
    assert parse_ltl(ltl_to_text(f), ("a", "b")) == f
