"""Concrete syntax for formulas.

Grammar (whitespace-insensitive, ``#`` starts a line comment)::

    formula    := (prefix '.')? body
    prefix     := (fo | so) ('.' (fo | so))*
    fo         := ('forall' | 'exists') IDENT 'in' dom
    dom        := 'S' | 'A' | IDENT
    so         := 'fix' IDENT ('min' | 'max') '{' constraint (';' constraint)* '}'
    constraint := ('forall' IDENT 'in' dom '.'?)* body '=>' IDENT 'in' IDENT
                | IDENT 'in' IDENT

Bodies use ``prop@var`` atoms, ``true``/``false``, unary ``! X G F``,
binary ``& | -> <-> U W``, membership ``var in SET`` and the agreement
macro ``eq(v1, v2; p q ...)`` (an empty prop list means all propositions).
Binding strength from loosest to tightest: ``<->``, ``->``, ``|``, ``&``,
``U``/``W``, unary operators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import (FALSE, TRUE, And, Atom, Eventually, FixConstraint, FixMode, FoQuantifier,
                  FormulaAst, Globally, Iff, Implies, Member, Next, Not, Or, Quant,
                  SeedConstraint, SoQuantifier, Until, WeakUntil, eq_macro, so_ref)


class FormulaError(ValueError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


_TOKEN = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<op><->|->|=>|[&|!(){};,.@])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), line, pos - line_start + 1))
        for k, ch in enumerate(m.group()):
            if ch == "\n":
                line, line_start = line + 1, pos + k + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


class Parser:
    def __init__(self, text: str, aps):
        self.toks = tokenize(text)
        self.i = 0
        self.aps = tuple(aps)

    # -- token helpers ----------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise FormulaSyntaxError(msg, tok.line, tok.col)

    def eat(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "eof":
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.i += 1
        return t

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.error(f"expected identifier, found {self.tok.text or 'end of input'!r}")
        t = self.tok
        self.i += 1
        return t.text

    # -- formula ---------------------------------------------------------------
    def formula(self) -> FormulaAst:
        prefix = []
        while self.tok.text in ("forall", "exists", "fix"):
            prefix.append(self.fo() if self.tok.text != "fix" else self.so())
            self.eat(".")
        body = self.body()
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        return FormulaAst(self.aps, tuple(prefix), body)

    def fo(self) -> FoQuantifier:
        quant = Quant(self.tok.text)
        self.i += 1
        var = self.ident()
        self.eat("in")
        return FoQuantifier(quant, var, so_ref(self.ident()))

    def so(self) -> SoQuantifier:
        self.eat("fix")
        start = self.tok
        var = self.ident()
        if var in ("S", "A"):
            self.error(f"{var!r} is reserved", start)
        mode_tok = self.tok
        if mode_tok.text not in ("min", "max"):
            self.error("expected 'min' or 'max'")
        self.i += 1
        self.eat("{")
        constraints = [self.constraint(var)]
        while self.tok.text == ";":
            self.i += 1
            constraints.append(self.constraint(var))
        self.eat("}")
        return SoQuantifier(var, FixMode(mode_tok.text), tuple(constraints))

    def constraint(self, owner: str):
        if (self.tok.kind == "ident" and self.peek().text == "in" and self.peek(2).kind == "ident"
                and self.peek(3).text in (";", "}")):
            var = self.ident()
            self.eat("in")
            where = self.tok
            if self.ident() != owner:
                self.error(f"seed conjunct must add to {owner!r}", where)
            return SeedConstraint(var)
        dotted = []
        while self.tok.text == "forall":
            self.i += 1
            v = self.ident()
            self.eat("in")
            dotted.append((v, so_ref(self.ident())))
            if self.tok.text == ".":
                self.i += 1
        if not dotted:
            self.error("constraint needs quantified variables or the seed form 'var in SET'")
        step = self.body()
        self.eat("=>")
        where = self.tok
        target = self.ident()
        self.eat("in")
        so_tok = self.tok
        if self.ident() != owner:
            self.error(f"constraint conclusion must add to {owner!r}", so_tok)
        names = [v for v, _ in dotted]
        if target not in names:
            self.error(f"conclusion variable {target!r} is not quantified in this constraint", where)
        return FixConstraint(tuple(dotted), step, names.index(target) + 1)

    # -- bodies ----------------------------------------------------------------
    def body(self):
        left = self.implication()
        while self.tok.text == "<->":
            self.i += 1
            left = Iff(left, self.implication())
        return left

    def implication(self):
        left = self.disjunction()
        if self.tok.text == "->":
            self.i += 1
            return Implies(left, self.implication())
        return left

    def disjunction(self):
        left = self.conjunction()
        while self.tok.text == "|":
            self.i += 1
            left = Or(left, self.conjunction())
        return left

    def conjunction(self):
        left = self.until()
        while self.tok.text == "&":
            self.i += 1
            left = And(left, self.until())
        return left

    def until(self):
        left = self.unary()
        if self.tok.kind == "ident" and self.tok.text in ("U", "W") and self.peek().text != "@":
            op = self.tok.text
            self.i += 1
            right = self.until()
            return Until(left, right) if op == "U" else WeakUntil(left, right)
        return left

    def unary(self):
        t = self.tok
        if t.text == "!":
            self.i += 1
            return Not(self.unary())
        if t.kind == "ident" and t.text in ("X", "G", "F") and self.peek().text not in ("@", "in"):
            self.i += 1
            arg = self.unary()
            return {"X": Next, "G": Globally, "F": Eventually}[t.text](arg)
        return self.primary()

    def primary(self):
        t = self.tok
        if t.text == "(":
            self.i += 1
            f = self.body()
            self.eat(")")
            return f
        if t.kind != "ident":
            self.error(f"expected a formula, found {t.text or 'end of input'!r}")
        nxt = self.peek().text
        if t.text in ("true", "false") and nxt not in ("@", "in"):
            self.i += 1
            return TRUE if t.text == "true" else FALSE
        if t.text == "eq" and nxt == "(":
            self.i += 2
            v1 = self.ident()
            self.eat(",")
            v2 = self.ident()
            props = []
            if self.tok.text == ";":
                self.i += 1
                while self.tok.kind == "ident":
                    props.append(self.prop())
            self.eat(")")
            return eq_macro(v1, v2, props or self.aps)
        if nxt == "@":
            prop = self.prop()
            self.eat("@")
            return Atom(prop, self.ident())
        if nxt == "in":
            var = self.ident()
            self.eat("in")
            return Member(var, self.ident())
        self.error(f"expected 'prop@var' or 'var in SET', found {t.text!r}")

    def prop(self) -> str:
        t = self.tok
        name = self.ident()
        if name not in self.aps:
            self.error(f"unknown proposition {name!r}", t)
        return name


def parse_raw(text: str, aps) -> FormulaAst:
    """Parse without scoping checks or desugaring."""
    return Parser(text, aps).formula()


def parse_ltl(text: str, aps):
    """Parse a standalone quantifier-free body."""
    p = Parser(text, aps)
    f = p.body()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    return f


def parse_formula(text: str, aps, check_fragment: bool = True) -> FormulaAst:
    """Parse a formula and desugar its membership atoms after scope checking.

    With ``check_fragment`` any fragment diagnostic (for instance a greatest
    fixpoint) is raised as a :class:`FormulaError`.
    """
    from .desugar import desugar_membership
    from .validate import check_scopes, validate_fragment

    raw = parse_raw(text, aps)
    check_scopes(raw)
    ast = desugar_membership(raw)
    if check_fragment:
        problems = validate_fragment(ast)
        if problems:
            raise FormulaError("; ".join(problems))
    return ast
