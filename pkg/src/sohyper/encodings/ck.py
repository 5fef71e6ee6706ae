"""Common knowledge on the four-state example system."""

from __future__ import annotations

from .common import Instance, conj, nexts, system_text

FOUR_STATE_SYSTEM = system_text(
    ["a", "b", "c", "d"],
    [0],
    [({"a"}, [0, 1, 2, 3]), ({"b"}, [2, 3]), ({"d"}, [2]), ({"c"}, [3, 2])],
)

OBS = "(G eq(q1,q2;a d) | G eq(q1,q2;c d))"


def premise(n: int, var: str) -> str:
    """The trace starts with n copies of a and then stays in d."""
    return conj([nexts(i, f"a@{var}") for i in range(n)] + [nexts(n, f"G d@{var}")])


def ck_of_a_text(n: int) -> str:
    return (
        f"fix X min {{ forall q in S. {premise(n, 'q')} => q in X ;\n"
        f"  forall q1 in X. forall q2 in S. {OBS} => q2 in X }}.\n"
        "forall r in X. a@r\n"
    )


def ck_of_next_a_text(n: int) -> str:
    return (
        "forall p in S.\n"
        f"fix X min {{ p in X ; forall q1 in X. forall q2 in S. {OBS} => q2 in X }}.\n"
        f"forall r in X. ({premise(n, 'p')}) -> X a@r\n"
    )


def ck_instances(n: int) -> tuple[Instance, Instance]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return (
        Instance.from_text(f"ck_next_a_{n}", FOUR_STATE_SYSTEM, ck_of_next_a_text(n)),
        Instance.from_text(f"ck_a_{n}", FOUR_STATE_SYSTEM, ck_of_a_text(n)),
    )


def gen_ck_chain(n: int):
    """Four-state system with the CK-of-next-a and CK-of-a formulas."""
    nxt, first = ck_instances(n)
    return nxt.system, nxt.formula, first.formula
