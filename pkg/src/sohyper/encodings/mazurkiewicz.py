"""Closure of {a}{}^w under swapping adjacent independent letters {a} and {}."""

from __future__ import annotations

import re

from .common import Instance, conj, disj, nexts, system_text

SEED_SYSTEM = system_text(["a"], [0], [({"a"}, [1]), (set(), [1])])
INDEPENDENT = [({"a"}, set()), (set(), {"a"})]


def _letter(props: set, var: str) -> str:
    return f"a@{var}" if "a" in props else f"!a@{var}"


def swap_step(src: str, dst: str, independent=INDEPENDENT) -> str:
    """dst equals src up to one flip of an independent pair."""
    same = f"eq({src},{dst};a)"
    flips = [
        conj([_letter(x, src), _letter(y, dst), f"X ({_letter(y, src)} & {_letter(x, dst)})", f"X X G {same}"])
        for x, y in independent
    ]
    return f"{same} W ({disj(flips)})"


def _closure(step: str, dotted: str) -> str:
    return (
        "fix X min { forall q in S. true => q in X ;\n"
        f"  {dotted} {step} => q2 in X }}.\n"
    )


AT_MOST_ONCE = "forall r in X. G(a@r -> X G !a@r)\n"


def mazurkiewicz_text(variant: str) -> str:
    one = _closure(swap_step("q1", "q2"), "forall q1 in X. forall q2 in A.")
    if variant == "SwapA":
        return one + AT_MOST_ONCE
    if variant == "SwapATwice":
        two = f"({swap_step('q1', 'q3')}) & ({swap_step('q3', 'q2')})"
        return _closure(two, "forall q1 in X. forall q3 in A. forall q2 in A.") + AT_MOST_ONCE
    m = re.fullmatch(r"(SwapA|SwapAViolation)_(\d+)", variant)
    if m is None:
        raise ValueError(f"unknown Mazurkiewicz variant {variant!r}")
    n = int(m.group(2))
    if m.group(1) == "SwapA":
        return one + f"exists r in X. {nexts(n, 'a@r')}\n"
    if n < 1:
        raise ValueError("SwapAViolation_n needs n >= 1")
    return one + f"forall r in X. {disj(nexts(i, 'a@r') for i in range(n))}\n"


def mazurkiewicz_instance(variant: str) -> Instance:
    return Instance.from_text(f"maz_{variant}", SEED_SYSTEM, mazurkiewicz_text(variant))


def gen_mazurkiewicz(variant: str):
    return tuple(mazurkiewicz_instance(variant))
