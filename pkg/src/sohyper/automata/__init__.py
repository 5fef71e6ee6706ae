"""Büchi automata over zipped multi-track alphabets."""

from .complement import complement, complement_builder
from .emptiness import accepts, is_empty, language_included
from .nba import (NBA, ArityError, BudgetExceeded, LassoWord, Stats, empty_nba,
                  lasso_nba, universal_nba)
from .ops import (Product, bisim_reduce, determinize_safety, explore, intersect, lift,
                  project_exists, project_tracks, reduce, remap, trim, union)

__all__ = [
    "NBA", "ArityError", "BudgetExceeded", "LassoWord", "Stats", "Product",
    "accepts", "bisim_reduce", "complement", "complement_builder", "determinize_safety",
    "empty_nba", "explore", "intersect", "is_empty", "language_included", "lasso_nba",
    "lift", "project_exists", "project_tracks", "reduce", "remap", "trim", "union",
    "universal_nba",
]
