"""Formula syntax trees and the text front end around them."""

from .ast import *  # noqa: F401,F403
from .desugar import desugar_membership
from .parser import FormulaError, FormulaSyntaxError, parse_formula, parse_ltl, parse_raw
from .printer import ltl_to_text, to_text
from .validate import validate_fragment
