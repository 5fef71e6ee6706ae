"""Elimination of first-order trace quantifiers by automata products.

Tracks follow quantifier order, so the automaton for the body has one track
per first-order variable.  Quantifiers are removed innermost first: an
existential intersects with the domain automaton and projects the track
away; a universal does the same on the complement.  Complements are only
taken when the quantifier polarity changes, and they are explored on the
fly inside the product with the quantifier block's domains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .automata import (NBA, LassoWord, complement, complement_builder, empty_nba, intersect,
                       is_empty, lift, project_exists, project_tracks, reduce, universal_nba)
from .formula.ast import ALL, SYSTEM, FoQuantifier, FormulaAst, Not, Quant, SoVarRef
from .guards import Alphabet
from .ltl2nba import ltl_to_nba
from .system import TransitionSystem, system_to_nba


@dataclass(frozen=True)
class SoBinding:
    """Lower and upper automata for a trace set depending on ``arity_t`` traces."""

    var: SoVarRef
    arity_t: int
    lower: NBA
    upper: NBA
    lower_source: str = "exact"
    upper_source: str = "exact"

    @property
    def exact(self) -> bool:
        return self.lower is self.upper


Env = dict  # label ("S", "A" or a variable name) -> SoBinding


def base_env(ts: TransitionSystem) -> Env:
    alpha = ts.alphabet
    sysaut = system_to_nba(ts)
    top = universal_nba(alpha, 1)
    return {"S": SoBinding(SYSTEM, 0, sysaut, sysaut), "A": SoBinding(ALL, 0, top, top)}


class Mode(Enum):
    PROVE = "prove"
    REFUTE = "refute"


def e_product(nxt: NBA, c: NBA) -> NBA:
    """Existentially quantify the last track of ``nxt`` over the traces of ``c``."""
    i = nxt.arity
    return reduce(project_exists(intersect(lift(c, i), nxt), i - 1))


def u_product(nxt: NBA, c: NBA) -> NBA:
    """Universally quantify the last track of ``nxt`` over the traces of ``c``."""
    i = nxt.arity
    inner = reduce(project_exists(intersect(lift(c, i), complement_builder(nxt)), i - 1))
    return complement(inner)


@dataclass
class ChainResult:
    nonempty: bool
    witness: LassoWord | None = None  # tracks of the outermost existential block
    witness_vars: tuple = ()
    sources: set = field(default_factory=set)


def _is_universal(a: NBA) -> bool:
    return a.num_states == 1 and a.all_accepting and a.edges[0] == ((0, a.alphabet.true),)


def _context(alpha: Alphabet, arity: int, members: list[tuple[int, NBA]]):
    """Joint domain constraint for the quantifiers at the given tracks."""
    ctx = None
    for track, c in members:
        if _is_universal(c):
            continue
        piece = lift(c, arity, track)
        ctx = piece if ctx is None else intersect(ctx, piece)
    return ctx


def run_chain(ast: FormulaAst, env: Env, mode: Mode, overrides: dict | None = None) -> ChainResult:
    """Decide the first-order part of ``ast`` under the bindings in ``env``.

    In refute mode the body is negated and the quantifiers dualized, so a
    nonempty result means the formula is violated.  ``overrides`` maps a
    set label to an automaton used for every quantifier over that set.
    """
    alpha = Alphabet.of(ast.aps)
    fos: list[FoQuantifier] = ast.fo_quantifiers
    quants = [q.quant if mode is Mode.PROVE else q.quant.dual() for q in fos]
    body = ast.body if mode is Mode.PROVE else Not(ast.body)
    result = ChainResult(False)

    def domain(k: int) -> NBA:
        q = fos[k]
        label = q.domain.label
        if overrides and label in overrides:
            result.sources.add("override")
            return overrides[label]
        b: SoBinding = env[label]
        if quants[k] is Quant.EXISTS:
            result.sources.add(b.lower_source)
            return b.lower
        result.sources.add(b.upper_source)
        return b.upper

    a = ltl_to_nba(body, [q.var for q in fos], alpha)
    negated = False  # when set, ``a`` holds the complement of the current language
    outer = 0
    while outer < len(quants) and quants[outer] is Quant.EXISTS:
        outer += 1
    i = len(quants)
    while i > outer:
        q = quants[i - 1]
        j = i
        while j - 1 > outer and quants[j - 2] is q:
            j -= 1
        ctx = _context(alpha, i, [(k, domain(k)) for k in range(j - 1, i)])
        want_negated = q is Quant.FORALL
        src = complement_builder(a) if negated != want_negated else a
        negated = want_negated
        if ctx is None:
            from .automata import explore

            prod = src if isinstance(src, NBA) else explore(src)
        else:
            prod = intersect(ctx, src)
        a = reduce(project_tracks(prod, range(j - 1, i)))
        i = j - 1
    if outer == 0:
        result.nonempty = (is_empty(a) is not None) != negated
        return result
    if negated:
        a = complement(a)
    ctx = _context(alpha, outer, [(k, domain(k)) for k in range(outer)])
    full = a if ctx is None else intersect(ctx, a)
    w = is_empty(full)
    if w is not None:
        result.nonempty = True
        result.witness = w
        result.witness_vars = tuple(q.var for q in fos[:outer])
    return result


def eliminate_prefix(ast: FormulaAst, env: Env, mode: Mode) -> NBA:
    """Automaton over the empty alphabet: nonempty iff the chain succeeds."""
    alpha = Alphabet.of(ast.aps)
    res = run_chain(ast, env, mode)
    return universal_nba(alpha, 0) if res.nonempty else empty_nba(alpha, 0)
