"""Omega-regular model checking as a least-fixpoint formula.

``init`` and ``bad`` talk about trace ``q``; ``step`` relates ``q`` to its
successor ``q2``.  The formula is meant for the all-traces system.
"""

from __future__ import annotations

from ..formula import parse_formula
from ..system import all_traces_system
from .common import Instance


def regular_mc_text(init: str, step: str, bad: str) -> str:
    return (
        f"fix X min {{ forall q in S. {init} => q in X ;\n"
        f"  forall q in X. forall q2 in A. {step} => q2 in X }}.\n"
        f"forall q in X. !({bad})\n"
    )


def regular_mc_instance(aps, init: str, step: str, bad: str, name: str = "regular_mc") -> Instance:
    return Instance.from_text(name, all_traces_system(aps).to_text(), regular_mc_text(init, step, bad))


def gen_regular_mc(aps, init: str, step: str, bad: str):
    return parse_formula(regular_mc_text(init, step, bad), tuple(aps))
