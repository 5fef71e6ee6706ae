"""Muddy children.

Child i observes every forehead but its own (proposition ``m<i>``) and the
public announcements ``f<j>`` ("child j has stepped forward").  With k muddy
children, the muddy ones step forward in round k and the clean ones in
round k+1; the system then stutters.
"""

from __future__ import annotations

from itertools import combinations

from .common import Instance, conj, disj, nexts, system_text


def muddy_system_text(n: int) -> str:
    aps = [f"m{i}" for i in range(n)] + [f"f{i}" for i in range(n)]
    states = []
    initial = []
    for k in range(1, n + 1):
        for muddy in combinations(range(n), k):
            for r in range(k + 2):
                idx = len(states)
                if r == 0:
                    initial.append(idx)
                props = {f"m{i}" for i in muddy}
                props |= {f"f{i}" for i in range(n) if r >= k + (i not in muddy)}
                states.append((props, [idx if r == k + 1 else idx + 1]))
    return system_text(aps, initial, states)


def muddy_formula_text(n: int, m: int) -> str:
    views = []
    for i in range(n):
        visible = [f"m{j}" for j in range(n) if j != i] + [f"f{j}" for j in range(n)]
        views.append(conj(nexts(s, f"eq(q1,q2;{' '.join(visible)})") for s in range(m)))
    agree = conj(f"m{i}@r1 <-> m{i}@r2" for i in range(n))
    return (
        "forall p in S.\n"
        f"fix X min {{ p in X ; forall q1 in X. forall q2 in S. {disj(views)} => q2 in X }}.\n"
        f"forall r1 in X. forall r2 in X. {agree}\n"
    )


def muddy_instance(n: int, m: int) -> Instance:
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 children and m >= 1 rounds")
    return Instance.from_text(f"muddy_{n}_{m}", muddy_system_text(n), muddy_formula_text(n, m))


def gen_muddy_children(n: int, m: int):
    return tuple(muddy_instance(n, m))
