"""Lower and upper approximations of least-fixpoint trace sets."""

from .iterate import Iteration, under_approx
from .learner import Dfa, LearnerState, ObservationTable, PrefixOracle, dfa_to_safety_nba
from .overapprox import feed_counterexample, new_learner, over_approx, park_check
from .step import apply_constraints, build_step, step_witness
