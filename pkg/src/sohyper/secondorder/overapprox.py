"""Upper bounds: inductive invariants found by learning, verified by Park's rule."""

from __future__ import annotations

from ..automata import (NBA, LassoWord, accepts, empty_nba, is_empty, language_included,
                        universal_nba)
from ..firstorder import Env
from ..formula.ast import SoQuantifier
from ..guards import Alphabet
from .learner import LearnerState, ObservationTable, PrefixOracle, dfa_to_safety_nba, support_letters
from .step import apply_constraints, step_witness

MAX_LETTERS = 256
QUERIES_PER_UNIT = 8


def park_check(so: SoQuantifier, env: Env, bound_vars, candidate: NBA):
    """(seed counterexample, inductivity counterexample); both None iff ``candidate`` is inductive."""
    alpha = candidate.alphabet
    seed = apply_constraints(so, env, empty_nba(alpha, len(bound_vars) + 1), bound_vars, "upper")
    w = language_included(seed, candidate)
    if w is not None:
        return w, None
    step = apply_constraints(so, env, candidate, bound_vars, "upper")
    return None, language_included(step, candidate)


def new_learner(alphabet: Alphabet, bound_vars) -> LearnerState | None:
    arity = len(bound_vars) + 1
    if (1 << (len(alphabet.aps) * arity)) > MAX_LETTERS:
        return None
    return LearnerState(arity)


def _scan_length(*words: LassoWord, extra: int = 0) -> int:
    return max(len(w.prefix) + 2 * len(w.cycle) for w in words) + extra


def over_approx(so: SoQuantifier, env: Env, budget: int, bound_vars, alphabet: Alphabet,
                state: LearnerState | None = None, members=None) -> tuple[NBA, LearnerState | None]:
    """An inductive invariant containing the least fixpoint, or the universal automaton.

    ``members(K)`` returns the K-th iterate used by the membership oracle.
    Learner state is returned so that later rounds continue from it.
    """
    top = universal_nba(alphabet, len(bound_vars) + 1)
    if budget <= 0:
        return top, state
    if state is None:
        state = new_learner(alphabet, bound_vars)
        if state is None:
            return top, None
    depth = budget + 2
    if members is None:
        from .iterate import Iteration

        it = Iteration(so, env, bound_vars, alphabet)
        members = it.get
    if state.depth != depth:
        # experiments survive a deeper oracle; rows are recomputed on demand
        state.depth = depth
        target = members(depth)
        state.add_letters(support_letters(target, alphabet.letters(state.arity)))
        state.set_oracle(PrefixOracle(target, state.letters))
        if state.table is None:
            state.table = ObservationTable(state.letters, state.mq)
    for _ in range(budget * QUERIES_PER_UNIT):
        state.queries += 1
        dfa = state.table.hypothesis()
        state.hypothesis = dfa
        cand = dfa_to_safety_nba(dfa, state.letters, alphabet, state.arity)
        seed_cex, ind_cex = park_check(so, env, bound_vars, cand)
        if seed_cex is None and ind_cex is None:
            return cand, state
        if seed_cex is not None:
            k = dfa.first_rejected(state.encode(seed_cex, _scan_length(seed_cex)))
            word = state.encode(seed_cex, _scan_length(seed_cex))
            state.add_positive(word)
            state.table.add_counterexample(word[: k if k is not None else len(word)])
            continue
        if not _refine_on_step(so, env, bound_vars, state, cand, ind_cex):
            break
    return top, state


def _refine_on_step(so, env, bound_vars, state: LearnerState, cand: NBA, w: LassoWord) -> bool:
    dfa = state.hypothesis
    full = state.encode(w, _scan_length(w))
    k = dfa.first_rejected(full)
    if k is not None and state.mq(full[:k]):
        state.table.add_counterexample(full[:k])
        return True
    found = step_witness(so, env, cand, bound_vars, cand)
    if found is None:
        return False
    c, lasso = found
    l = len(bound_vars)
    names = list(bound_vars) + [v for v, _ in c.dotted]
    for v, dom in c.dotted:
        if dom.label != so.var:
            continue
        t = names.index(v)
        pred = LassoWord.zip([lasso.track(i) for i in range(l)] + [lasso.track(t)])
        word = state.encode(pred, _scan_length(pred, extra=state.depth))
        for n in range(len(word) + 1):
            if not state.mq(word[:n]):
                if dfa.accepts(word[:n]):
                    state.table.add_counterexample(word[:n])
                    return True
                break
    return False


def feed_counterexample(state: LearnerState, w: LassoWord, members: NBA) -> tuple[LearnerState, bool]:
    """Use a trace from a failed proof attempt.

    Returns (state, genuine): genuine means ``w`` is a real member of the
    iterate, so the failure is not caused by a too-coarse invariant.
    """
    if accepts(members, w):
        return state, True
    if state.table is None or state.hypothesis is None:
        return state, False
    word = state.encode(w, _scan_length(w, extra=state.depth))
    for n in range(len(word) + 1):
        if not state.mq(word[:n]):
            if state.hypothesis.accepts(word[:n]):
                state.table.add_counterexample(word[:n])
                state.hypothesis = state.table.hypothesis()
            break
    return state, False
