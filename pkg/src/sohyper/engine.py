"""The outer refinement loop: approximate set variables, then decide the trace quantifiers.

Each round N computes, for every set variable in prefix order, a lower bound
(the iterate C_{N+1}) and an upper bound (the iterate itself once the
iteration has stabilized, otherwise a learned inductive invariant or the
universal automaton).  A proof attempt resolves existential quantifiers
against lower bounds and universal ones against upper bounds; a refutation
attempt does the same for the negated formula.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

from .automata import BudgetExceeded, LassoWord, Stats, empty_nba, universal_nba
from .firstorder import Env, Mode, SoBinding, base_env, run_chain
from .formula.ast import FixConstraint, FormulaAst, SoKind, SoQuantifier
from .secondorder import Iteration, feed_counterexample, over_approx
from .system import TransitionSystem


class Outcome(Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


class Method(Enum):
    ITER = "iter"
    LEARN = "learn"
    BOTH = "both"


@dataclass
class CheckConfig:
    max_precision: int = 50
    method: Method = Method.ITER
    state_budget: int = 1_000_000
    start_precision: int = 0
    # called as observer(n, so, env, binding) after each binding is chosen
    observer: Callable | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.max_precision < 0:
            raise ValueError("max_precision must be nonnegative")
        if isinstance(self.method, str):
            self.method = Method(self.method)


@dataclass
class Verdict:
    outcome: Outcome
    precision: int
    method: str = "none"
    witness: LassoWord | None = None
    witness_vars: tuple = ()
    stats: dict = field(default_factory=dict)
    diagnostic: str = ""

    @property
    def peak_states(self) -> int:
        return self.stats.get("peak_states", 0)

    @property
    def elapsed_ms(self) -> int:
        return int(self.stats.get("ms", 0))

    def line(self) -> str:
        return (f"VERDICT={self.outcome.value} precision={self.precision} method={self.method} "
                f"peak_states={self.peak_states} ms={self.elapsed_ms}")

    def record(self, name: str) -> str:
        return f"instance={name} " + self.line()


def _deps(so: SoQuantifier) -> list[str]:
    out = []
    for c in so.constraints:
        if isinstance(c, FixConstraint):
            for _, d in c.dotted:
                if d.label != so.var and d.label not in out:
                    out.append(d.label)
    return out


def _method_of(sources: set) -> str:
    if "learn" in sources:
        return "learn"
    if "iter" in sources:
        return "iter"
    return "none"


class _VarState:
    def __init__(self):
        self.key = None
        self.iteration: Iteration | None = None
        self.learner = None


def verify(ts: TransitionSystem, ast: FormulaAst, cfg: CheckConfig | None = None) -> Verdict:
    cfg = cfg or CheckConfig()
    if tuple(ts.aps) != tuple(ast.aps):
        raise ValueError(f"system propositions {ts.aps} differ from formula propositions {ast.aps}")
    t0 = time.perf_counter()
    Stats.reset(cfg.state_budget)
    timings = {"iterate": 0.0, "learn": 0.0, "prove": 0.0, "refute": 0.0}
    alpha = ts.alphabet
    vars_: dict[str, _VarState] = {so.var: _VarState() for so in ast.so_quantifiers}
    n = cfg.start_precision
    base = base_env(ts)

    def finish(outcome, precision, method="none", res=None, diagnostic=""):
        stats = {"iterations": precision, "peak_states": Stats.peak_states,
                 "ms": (time.perf_counter() - t0) * 1000,
                 "phases_ms": {k: round(v * 1000, 1) for k, v in timings.items()}}
        return Verdict(outcome, precision, method,
                       res.witness if res else None, res.witness_vars if res else (),
                       stats, diagnostic)

    try:
        for n in range(cfg.start_precision, cfg.max_precision + 1):
            env: Env = dict(base)
            prove_env: Env = dict(env)
            learned = []
            for so in ast.so_quantifiers:
                st = vars_[so.var]
                bound = ast.bound_before(so)
                deps = _deps(so)
                key = tuple(id(env[d].lower) for d in deps) + tuple(id(env[d].upper) for d in deps)
                if st.key != key:
                    st.key = key
                    st.iteration = Iteration(so, dict(env), bound, alpha)
                    st.learner = None
                t = time.perf_counter()
                lower = st.iteration.get(n + 1)
                exact = all(env[d].exact for d in deps) and st.iteration.is_stable(n)
                timings["iterate"] += time.perf_counter() - t
                if exact:
                    binding = SoBinding(so.ref, len(bound), lower, lower, "iter", "iter")
                    if cfg.observer:
                        cfg.observer(n, so, dict(env), binding)
                    env[so.var] = prove_env[so.var] = binding
                    continue
                upper, source = universal_nba(alpha, len(bound) + 1), "universal"
                if cfg.method is not Method.ITER:
                    t = time.perf_counter()
                    upper, st.learner = over_approx(so, env, n, bound, alpha, st.learner,
                                                    members=st.iteration.get)
                    timings["learn"] += time.perf_counter() - t
                    if st.learner is not None:
                        learned.append(so)
                        if upper.num_states and not _trivial(upper):
                            source = "learn"
                binding = SoBinding(so.ref, len(bound), lower, upper, "iter", source)
                if cfg.observer:
                    cfg.observer(n, so, dict(env), binding)
                env[so.var] = binding
                if cfg.method is Method.LEARN:
                    prove_env[so.var] = SoBinding(so.ref, len(bound), empty_nba(alpha, len(bound) + 1),
                                                  upper, "empty", source)
                else:
                    prove_env[so.var] = env[so.var]
            t = time.perf_counter()
            res = run_chain(ast, prove_env, Mode.PROVE)
            timings["prove"] += time.perf_counter() - t
            if res.nonempty:
                return finish(Outcome.SAT, n, _method_of(res.sources), res)
            t = time.perf_counter()
            res = run_chain(ast, env, Mode.REFUTE)
            timings["refute"] += time.perf_counter() - t
            if res.nonempty:
                return finish(Outcome.UNSAT, n, _method_of(res.sources), res)
            if learned:
                t = time.perf_counter()
                _feedback(ast, env, learned, vars_, n)
                timings["learn"] += time.perf_counter() - t
    except BudgetExceeded as exc:
        return finish(Outcome.UNKNOWN, n, diagnostic=str(exc))
    return finish(Outcome.UNKNOWN, cfg.max_precision, diagnostic="maximal precision reached")


def _trivial(a) -> bool:
    return a.num_states == 1 and a.edges[0] == ((0, a.alphabet.true),)


def _feedback(ast: FormulaAst, env: Env, learned, vars_, n: int) -> None:
    """Turn a violation inside the learned invariants into learner counterexamples."""
    overrides = {so.var: env[so.var].upper for so in learned}
    res = run_chain(ast, env, Mode.REFUTE, overrides)
    if not res.nonempty or res.witness is None:
        return
    position = {v: i for i, v in enumerate(res.witness_vars)}
    for q in ast.fo_quantifiers:
        if q.var not in position or q.domain.kind is not SoKind.USER:
            continue
        so = next((s for s in learned if s.var == q.domain.name), None)
        if so is None:
            continue
        bound = ast.bound_before(so)
        if not all(b in position for b in bound):
            continue
        tracks = [res.witness.track(position[b]) for b in bound] + [res.witness.track(position[q.var])]
        word = LassoWord.zip(tracks)
        st = vars_[so.var]
        if st.learner is not None:
            feed_counterexample(st.learner, word, st.iteration.get(n + 3))


from .bruteforce import NotFinitelyCheckable, brute_force_check  # noqa: E402  (re-export)
