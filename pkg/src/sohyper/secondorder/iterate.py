"""Lower bounds by fixpoint iteration from the empty set."""

from __future__ import annotations

from ..automata import NBA, empty_nba, language_included, reduce, union
from ..firstorder import Env
from ..formula.ast import FixConstraint, SoKind, SoQuantifier
from ..guards import Alphabet
from .step import build_step


class Iteration:
    """The chain C_0 = empty, C_{m+1} = C_m united with one step applied to C_m.

    Iterates are kept, so asking for a larger index only computes the missing
    steps.  ``env`` must stay fixed for the lifetime of the object.
    """

    def __init__(self, so: SoQuantifier, env: Env, bound_vars, alphabet: Alphabet,
                 which: str = "lower"):
        self.so, self.env, self.which = so, env, which
        self.bound_vars = list(bound_vars)
        self.alphabet = alphabet
        self.chain: list[NBA] = [empty_nba(alphabet, len(self.bound_vars) + 1)]
        self.stable: list[bool] = []  # stable[m]: C_{m+1} adds nothing to C_m
        self._fixed: dict[int, NBA] = {}

    def _self_referencing(self, c: FixConstraint) -> bool:
        return any(d.kind is SoKind.USER and d.name == self.so.var for _, d in c.dotted)

    def _apply(self, current: NBA) -> NBA:
        out = empty_nba(self.alphabet, len(self.bound_vars) + 1)
        for k, c in enumerate(self.so.constraints):
            if self._self_referencing(c):
                piece = build_step(c, self.env, current, self.bound_vars, self.so.var, self.which)
            else:
                piece = self._fixed.get(k)
                if piece is None:
                    piece = self._fixed[k] = build_step(c, self.env, current, self.bound_vars,
                                                        self.so.var, self.which)
            out = union(out, piece)
        return reduce(out)

    def extend(self) -> None:
        current = self.chain[-1]
        new = self._apply(current)
        if language_included(new, current) is None:
            self.chain.append(current)
            self.stable.append(True)
        else:
            self.chain.append(reduce(union(current, new)))
            self.stable.append(False)

    def get(self, m: int) -> NBA:
        while len(self.chain) <= m:
            if self.stable and self.stable[-1]:
                self.chain.append(self.chain[-1])
                self.stable.append(True)
                continue
            self.extend()
        return self.chain[m]

    def is_stable(self, m: int) -> bool:
        """True when C_{m+1} equals C_m, i.e. C_m is the least fixpoint."""
        self.get(m + 1)
        return self.stable[m]


def under_approx(so: SoQuantifier, env: Env, n_iters: int, bound_vars, alphabet: Alphabet) -> NBA:
    """The iterate C_{n_iters} (C_0 is empty)."""
    return Iteration(so, env, bound_vars, alphabet).get(n_iters)
