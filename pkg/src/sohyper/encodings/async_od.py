"""Observational determinism, synchronous and up to stuttering.

Programs are compiled to one state per location; only the output ``o`` is
kept as a proposition since the formulas never mention the secret.
"""

from __future__ import annotations

from .common import Instance, conj, system_text

PROGRAMS = ("TSyn", "TAsyn", "Q1")


def _branches(program: str) -> list[str]:
    """Output sequences of the two secret-dependent branches, last letter loops."""
    match program:
        case "TSyn":
            return ["0001", "0001"]
        case "TAsyn":
            return ["0001", "00001"]
        case "Q1":
            return ["000101", "0001101"]
    raise ValueError(f"unknown program {program!r}; expected one of {PROGRAMS}")


def program_system_text(program: str) -> str:
    states = []
    initial = []
    for outputs in dict.fromkeys(_branches(program)):
        start = len(states)
        initial.append(start)
        for i, bit in enumerate(outputs):
            idx = start + i
            last = i == len(outputs) - 1
            states.append(({"o"} if bit == "1" else set(), [idx if last else idx + 1]))
    return system_text(["o"], initial, states)


def stutter_step(src: str, dst: str, props=("o",)) -> str:
    """dst is src with exactly one letter duplicated."""
    same = f"eq({src},{dst};{' '.join(props)})"
    shift = conj(f"G({p}@{src} <-> X {p}@{dst})" for p in props)
    return f"{same} U ({same} & {shift})"


def od_text() -> str:
    return "forall p1 in S. forall p2 in S. G(o@p1 <-> o@p2)\n"


def async_od_text() -> str:
    def closure(x: str, p: str) -> str:
        return f"fix {x} min {{ {p} in {x} ; forall q in {x}. forall q2 in A. {stutter_step('q', 'q2')} => q2 in {x} }}.\n"

    return (
        "forall p1 in S. forall p2 in S.\n"
        + closure("X1", "p1")
        + closure("X2", "p2")
        + "exists r1 in X1. exists r2 in X2. G(o@r1 <-> o@r2)\n"
    )


def async_od_instances(program: str) -> tuple[Instance, Instance]:
    sys_text = program_system_text(program)
    return (
        Instance.from_text(f"od_{program}", sys_text, od_text()),
        Instance.from_text(f"asyn_od_{program}", sys_text, async_od_text()),
    )


def gen_async_od(program: str):
    """(system, synchronous OD formula, stutter-insensitive OD formula)."""
    sync, asyn = async_od_instances(program)
    return sync.system, sync.formula, asyn.formula
