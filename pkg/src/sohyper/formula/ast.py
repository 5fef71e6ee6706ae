"""Abstract syntax: trace and set quantifier prefix, fixpoint constraints, LTL body."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


# -- quantifier-free bodies ---------------------------------------------------

@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Atom:
    prop: str
    var: str


@dataclass(frozen=True)
class Member:
    """The membership sugar ``var in so``: the trace bound to var lies in the set."""

    var: str
    so: str


@dataclass(frozen=True)
class Not:
    arg: "Ltl"


@dataclass(frozen=True)
class And:
    left: "Ltl"
    right: "Ltl"


@dataclass(frozen=True)
class Or:
    left: "Ltl"
    right: "Ltl"


@dataclass(frozen=True)
class Implies:
    left: "Ltl"
    right: "Ltl"


@dataclass(frozen=True)
class Iff:
    left: "Ltl"
    right: "Ltl"


@dataclass(frozen=True)
class Next:
    arg: "Ltl"


@dataclass(frozen=True)
class Until:
    left: "Ltl"
    right: "Ltl"


@dataclass(frozen=True)
class WeakUntil:
    left: "Ltl"
    right: "Ltl"


@dataclass(frozen=True)
class Eventually:
    arg: "Ltl"


@dataclass(frozen=True)
class Globally:
    arg: "Ltl"


Ltl = Union[Const, Atom, Member, Not, And, Or, Implies, Iff, Next, Until, WeakUntil,
            Eventually, Globally]

TRUE = Const(True)
FALSE = Const(False)


def conj(parts) -> Ltl:
    parts = list(parts)
    if not parts:
        return TRUE
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def disj(parts) -> Ltl:
    parts = list(parts)
    if not parts:
        return FALSE
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def eq_macro(v1: str, v2: str, props) -> Ltl:
    """Agreement of two traces on ``props`` at the current position."""
    return conj(Iff(Atom(p, v1), Atom(p, v2)) for p in props)


def nexts(f: Ltl, k: int) -> Ltl:
    for _ in range(k):
        f = Next(f)
    return f


def children(f: Ltl) -> tuple:
    match f:
        case Const() | Atom() | Member():
            return ()
        case Not(a) | Next(a) | Eventually(a) | Globally(a):
            return (a,)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r) | Until(l, r) | WeakUntil(l, r):
            return (l, r)
    raise TypeError(f"not a formula: {f!r}")


def walk(f: Ltl):
    yield f
    for c in children(f):
        yield from walk(c)


def trace_vars(f: Ltl) -> set[str]:
    return {g.var for g in walk(f) if isinstance(g, (Atom, Member))}


def substitute(f: Ltl, mapping: dict[str, str]) -> Ltl:
    """Rename trace variables."""
    match f:
        case Atom(p, v):
            return Atom(p, mapping.get(v, v))
        case Member(v, so):
            return Member(mapping.get(v, v), so)
        case Const():
            return f
    return type(f)(*(substitute(c, mapping) for c in children(f)))


def depth(f: Ltl) -> int:
    return 1 + max((depth(c) for c in children(f)), default=0)


# -- quantifier prefix ----------------------------------------------------------

class SoKind(Enum):
    SYSTEM = "S"
    ALL = "A"
    USER = "user"


@dataclass(frozen=True)
class SoVarRef:
    kind: SoKind
    name: str = ""

    @property
    def label(self) -> str:
        return self.name if self.kind is SoKind.USER else self.kind.value

    def __str__(self) -> str:
        return self.label


SYSTEM = SoVarRef(SoKind.SYSTEM)
ALL = SoVarRef(SoKind.ALL)


def so_ref(name: str) -> SoVarRef:
    if name == "S":
        return SYSTEM
    if name == "A":
        return ALL
    return SoVarRef(SoKind.USER, name)


class Quant(Enum):
    EXISTS = "exists"
    FORALL = "forall"

    def dual(self) -> "Quant":
        return Quant.FORALL if self is Quant.EXISTS else Quant.EXISTS


class FixMode(Enum):
    LEAST = "min"
    GREATEST = "max"


@dataclass(frozen=True)
class FoQuantifier:
    quant: Quant
    var: str
    domain: SoVarRef


@dataclass(frozen=True)
class FixConstraint:
    """``forall d1 in D1 ... forall dn in Dn. step => d_target in owner``."""

    dotted: tuple  # tuple[tuple[str, SoVarRef], ...]
    step: Ltl
    target: int  # 1-based index into dotted

    @property
    def target_var(self) -> str:
        return self.dotted[self.target - 1][0]


@dataclass(frozen=True)
class SeedConstraint:
    """Raw ``var in owner`` conjunct before desugaring."""

    var: str


@dataclass(frozen=True)
class SoQuantifier:
    var: str
    mode: FixMode
    constraints: tuple  # FixConstraint (or SeedConstraint before desugaring)

    @property
    def ref(self) -> SoVarRef:
        return SoVarRef(SoKind.USER, self.var)


@dataclass(frozen=True)
class FormulaAst:
    aps: tuple
    prefix: tuple  # FoQuantifier | SoQuantifier, in quantification order
    body: Ltl

    @property
    def fo_quantifiers(self) -> list[FoQuantifier]:
        return [q for q in self.prefix if isinstance(q, FoQuantifier)]

    @property
    def so_quantifiers(self) -> list[SoQuantifier]:
        return [q for q in self.prefix if isinstance(q, SoQuantifier)]

    def bound_before(self, so: SoQuantifier) -> list[str]:
        """First-order variables quantified before ``so`` (its l_j dependencies)."""
        out = []
        for q in self.prefix:
            if isinstance(q, SoQuantifier) and q.var == so.var:
                return out
            if isinstance(q, FoQuantifier):
                out.append(q.var)
        raise ValueError(f"{so.var} is not in the prefix")
