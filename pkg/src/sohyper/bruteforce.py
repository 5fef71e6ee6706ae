"""Explicit-state reference checker over a bounded universe of lasso traces.

Traces of the system and of the all-traces set are restricted to lassos
whose prefix plus cycle has length at most ``depth``.  Least fixpoints are
computed as finite sets by saturation, and the quantifier prefix is
expanded exhaustively.  The result at ``depth`` is only trusted when it
agrees with the result at ``depth + 1``.
"""

from __future__ import annotations

import time
from itertools import product

from .automata import LassoWord
from .formula.ast import And, Atom, FixConstraint, FixMode, FoQuantifier, FormulaAst, Globally, Iff, SoKind
from .ltl2nba import eval_ltl_on_lasso
from .system import TransitionSystem, lasso_traces

MAX_UNIVERSE = 20_000


class NotFinitelyCheckable(RuntimeError):
    pass


def all_lassos(aps, max_len: int, limit: int = MAX_UNIVERSE) -> list[LassoWord]:
    """Canonical single-track lassos over 2^aps with |prefix| + |cycle| <= max_len."""
    singles = [frozenset(aps[i] for i in range(len(aps)) if bits >> i & 1) for bits in range(1 << len(aps))]
    total = sum(len(singles) ** n * n for n in range(1, max_len + 1))
    if total > limit:
        raise NotFinitelyCheckable(f"all-traces universe too large at depth {max_len} ({total} lassos)")
    out = set()
    for n in range(1, max_len + 1):
        for word in product(singles, repeat=n):
            letters = tuple((x,) for x in word)
            for k in range(n):
                out.add(LassoWord(letters[:k], letters[k:]).canonical())
    return sorted(out, key=_key)


def _key(w: LassoWord):
    def enc(part):
        return tuple(tuple(sorted(x)) for letter in part for x in letter)

    return (len(w.prefix) + len(w.cycle), enc(w.prefix), enc(w.cycle))


def _conjuncts(f):
    if isinstance(f, And):
        yield from _conjuncts(f.left)
        yield from _conjuncts(f.right)
    else:
        yield f


def _equal_to(step, var: str, aps) -> set[str]:
    """Variables u such that ``step`` contains the conjunct G(var =_AP u)."""
    out = set()
    for g in _conjuncts(step):
        if not isinstance(g, Globally):
            continue
        pairs = []
        for e in _conjuncts(g.arg):
            if isinstance(e, Iff) and isinstance(e.left, Atom) and isinstance(e.right, Atom) \
                    and e.left.prop == e.right.prop:
                pairs.append((e.left.prop, e.left.var, e.right.var))
        props = {p for p, _, _ in pairs}
        if props != set(aps):
            continue
        others = set()
        for _, a, b in pairs:
            if a == var:
                others.add(b)
            elif b == var:
                others.add(a)
            else:
                others.add(None)
        if len(others) == 1 and None not in others:
            out |= others
    return out


class _Checker:
    def __init__(self, ts: TransitionSystem, ast: FormulaAst, depth: int, limit: int):
        self.ast, self.depth, self.limit = ast, depth, limit
        self.aps = tuple(ts.aps)
        self.system = sorted(lasso_traces(ts, depth), key=_key)
        self.system_set = set(self.system)
        self._all: list | None = None
        self.evaluations = 0

    @property
    def all_traces(self) -> list:
        if self._all is None:
            self._all = all_lassos(self.aps, self.depth, self.limit)
        return self._all

    def domain(self, ref, sets) -> list:
        match ref.kind:
            case SoKind.SYSTEM:
                return self.system
            case SoKind.ALL:
                return self.all_traces
        return sorted(sets[ref.name], key=_key)

    def holds(self, f, assignment: dict) -> bool:
        self.evaluations += 1
        names = list(assignment)
        return eval_ltl_on_lasso(f, LassoWord.zip([assignment[v] for v in names]), names)

    def fixpoint(self, so, assignment: dict, sets: dict) -> frozenset:
        if so.mode is not FixMode.LEAST:
            raise NotFinitelyCheckable("only least fixpoints are supported")
        current: set = set()
        delta: set | None = None  # None: first round, nothing to restrict
        while True:
            found = set()
            for c in so.constraints:
                found |= self._apply(c, so.var, assignment, sets, current, delta)
            new = found - current
            if not new:
                return frozenset(current)
            current |= new
            delta = new

    def _apply(self, c: FixConstraint, owner: str, assignment, sets, current, delta) -> set:
        own = [i for i, (_, d) in enumerate(c.dotted) if d.kind is SoKind.USER and d.name == owner]
        if own and delta is None:
            return set()  # the empty set has no members to close over
        if not own and delta is not None:
            return set()  # does not depend on the set; done in the first round
        last_own = own[-1] if own else -1
        out = set()

        def go(i: int, env: dict, used_delta: bool):
            if i == len(c.dotted):
                if self.holds(c.step, env):
                    out.add(env[c.target_var])
                return
            var, dom = c.dotted[i]
            equal = [u for u in _equal_to(c.step, var, self.aps) if u in env]
            if equal:
                values = [env[equal[0]]]
                if dom.kind is SoKind.USER:
                    pool = current if dom.name == owner else sets[dom.name]
                    values = [w for w in values if w in pool]
                elif dom.kind is SoKind.SYSTEM:
                    values = [w for w in values if w in self.system_set]
            elif dom.kind is SoKind.USER and dom.name == owner:
                values = sorted(delta if i == last_own and not used_delta else current, key=_key)
            else:
                values = self.domain(dom, sets)
            for w in values:
                go(i + 1, {**env, var: w},
                   used_delta or (dom.kind is SoKind.USER and dom.name == owner and w in delta))

        go(0, dict(assignment), False)
        return out

    def run(self):
        """(truth value, witness assignment for the outermost block)."""
        return self._eval(0, {}, {})

    def _eval(self, i: int, assignment: dict, sets: dict):
        if i == len(self.ast.prefix):
            return self.holds(self.ast.body, assignment), dict(assignment)
        q = self.ast.prefix[i]
        if not isinstance(q, FoQuantifier):
            fix = self.fixpoint(q, assignment, sets)
            return self._eval(i + 1, assignment, {**sets, q.var: fix})
        want = q.quant.value == "exists"
        last = None
        for w in self.domain(q.domain, sets):
            value, witness = self._eval(i + 1, {**assignment, q.var: w}, sets)
            if value == want:
                return value, witness
            last = witness
        return not want, last


def brute_force_check(ts: TransitionSystem, ast: FormulaAst, depth_bound: int, limit: int = MAX_UNIVERSE):
    """Exact verdict on the lasso universe of size ``depth_bound``, cross-checked one level deeper.

    Raises :class:`NotFinitelyCheckable` when the two depths disagree or the
    universe exceeds ``limit``.
    """
    from .engine import Outcome, Verdict

    t0 = time.perf_counter()
    results = []
    evaluations = 0
    for d in (depth_bound, depth_bound + 1):
        chk = _Checker(ts, ast, d, limit)
        results.append(chk.run())
        evaluations += chk.evaluations
    (v0, wit), (v1, _) = results
    if v0 != v1:
        raise NotFinitelyCheckable(f"verdict changes between depth {depth_bound} and {depth_bound + 1}")
    names = tuple(wit) if wit else ()
    word = LassoWord.zip([wit[v] for v in names]) if names else None
    stats = {"evaluations": evaluations, "ms": (time.perf_counter() - t0) * 1000}
    return Verdict(Outcome.SAT if v0 else Outcome.UNSAT, depth_bound, "brute", word, names, stats)
