"""Parser for polynomial expressions such as ``1/3*(x + y)^2 - 2*x*y``.

Grammar, loosest binding first::

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := "-" unary | power
    power := atom ("^" INT)*
    atom  := INT ["/" INT] | NAME | "(" expr ")"

Multiplication must be written explicitly and ``/`` is only allowed between
two integer literals, where it forms a rational constant.  Offsets reported
in :class:`~mpseries.errors.ParseError` are byte offsets into the UTF-8 text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

from .errors import ParseError, UnknownVariable
from .poly import MultiPoly


@dataclass(frozen=True)
class IntLit:
    value: int


@dataclass(frozen=True)
class RatLit:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[IntLit, RatLit, Var, Neg, Add, Sub, Mul, Pow]


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, one of "+-*/^()", EOF or BAD
    text: str
    offset: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<INT>[0-9]+)|(?P<NAME>[A-Za-z][A-Za-z0-9_]*)|(?P<OP>[-+*/^()]))")
_SPACE_RE = re.compile(r"\s*")


def tokenize(text: str) -> List[Token]:
    """Split ``text`` into tokens; an unrecognised character becomes a ``BAD`` token and ends the list."""
    tokens = []
    pos = 0
    byte = 0
    n = len(text)
    while True:
        m = _TOKEN_RE.match(text, pos)
        if not m:
            sp = _SPACE_RE.match(text, pos).end()
            byte += len(text[pos:sp].encode("utf-8"))
            if sp == n:
                tokens.append(Token("EOF", "", byte))
            else:
                tokens.append(Token("BAD", text[sp], byte))
            return tokens
        start = m.start(m.lastgroup)
        byte += len(text[pos:start].encode("utf-8"))
        tok = m.group(m.lastgroup)
        kind = tok if m.lastgroup == "OP" else m.lastgroup
        tokens.append(Token(kind, tok, byte))
        byte += len(tok)
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected, message=None):
        t = self.tok
        if message is None:
            if t.kind == "EOF":
                message = "unexpected end of input"
            elif t.kind == "BAD":
                message = f"unexpected character {t.text!r}"
            else:
                message = f"unexpected token {t.text!r}"
        raise ParseError(message, t.offset, expected)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "EOF":
            self.fail({"+", "-", "*", "^", "end of input"})
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.advance().kind
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.tok.kind == "*":
            self.advance()
            left = Mul(left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        while self.tok.kind == "^":
            self.advance()
            if self.tok.kind != "INT":
                self.fail({"non-negative integer"}, "exponent must be a non-negative integer literal")
            base = Pow(base, int(self.advance().text))
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            if self.tok.kind == "/":
                self.advance()
                if self.tok.kind != "INT":
                    self.fail({"integer"}, "'/' must be followed by an integer literal")
                den = self.tok
                if int(den.text) == 0:
                    self.fail({"nonzero integer"}, "zero denominator")
                self.advance()
                return RatLit(Fraction(int(t.text), int(den.text)))
            return IntLit(int(t.text))
        if t.kind == "NAME":
            self.advance()
            return Var(t.text)
        if t.kind == "(":
            self.advance()
            e = self.expr()
            if self.tok.kind != ")":
                self.fail({")", "+", "-", "*", "^"})
            self.advance()
            return e
        self.fail({"integer", "name", "(", "-"})


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def to_multipoly(ast: Expr, vars: Sequence[str]) -> MultiPoly:
    vars = tuple(vars)

    def walk(e):
        if isinstance(e, (IntLit, RatLit)):
            return MultiPoly.constant(vars, e.value)
        if isinstance(e, Var):
            if e.name not in vars:
                raise UnknownVariable(f"variable {e.name!r} is not one of {', '.join(vars) or '(none)'}")
            return MultiPoly.variable(vars, e.name)
        if isinstance(e, Neg):
            return -walk(e.operand)
        if isinstance(e, Add):
            return walk(e.left) + walk(e.right)
        if isinstance(e, Sub):
            return walk(e.left) - walk(e.right)
        if isinstance(e, Mul):
            return walk(e.left) * walk(e.right)
        if isinstance(e, Pow):
            return walk(e.base) ** e.exponent
        raise TypeError(f"not an expression node: {e!r}")

    return walk(ast)


def parse_polynomial(text: str, vars: Sequence[str]) -> MultiPoly:
    return to_multipoly(parse(text), vars)
