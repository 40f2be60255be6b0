"""Recursive-descent parser for polynomial text.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER ("/" INTEGER)? | VARIABLE | "(" expr ")"

Unary minus binds weaker than ``^``, so ``-x^2`` is ``-(x^2)``.  Products
need an explicit ``*``.  The printed form of every polynomial parses back
to the same polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq, mpz

from ..algebra import MultiPoly
from ..errors import NegativeExponent, ParseError, UnknownVariable

DEFAULT_VARIABLES = ("x", "y", "u", "v")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            out.append(Token("end", "", len(text)))
            return out
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(Token("int", m.group(1), start))
        elif m.group(2):
            out.append(Token("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(Token("op", ch, start))
        pos = m.end()


class _Parser:
    def __init__(self, text: str, variables):
        self.tokens = tokenize(text)
        self.i = 0
        self.variables = set(variables)

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def fail(self, what: str):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected {what}, found {found}", t.pos)

    def parse(self) -> MultiPoly:
        if self.tok.kind == "end":
            self.fail("an expression")
        out = self.expr()
        if self.tok.kind != "end":
            self.fail("an operator or end of input")
        return out

    def expr(self) -> MultiPoly:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = acc + self.term()
            elif self.accept("-"):
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> MultiPoly:
        acc = self.unary()
        while self.accept("*"):
            acc = acc * self.unary()
        return acc

    def unary(self) -> MultiPoly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if not self.accept("^"):
            return base
        t = self.tok
        if t.kind == "op" and t.text == "-":
            raise NegativeExponent("exponents must be non-negative integers", t.pos)
        if t.kind != "int":
            self.fail("an integer exponent")
        self.take()
        return base ** int(t.text)

    def atom(self) -> MultiPoly:
        t = self.tok
        if t.kind == "int":
            self.take()
            num = mpz(t.text)
            if self.accept("/"):
                d = self.tok
                if d.kind != "int":
                    self.fail("an integer denominator")
                self.take()
                if int(d.text) == 0:
                    raise ParseError("zero denominator", d.pos)
                return MultiPoly.const(mpq(num, mpz(d.text)))
            return MultiPoly.const(mpq(num))
        if t.kind == "name":
            if t.text not in self.variables:
                allowed = ", ".join(sorted(self.variables))
                raise UnknownVariable(f"unknown variable {t.text!r} (allowed: {allowed})", t.pos)
            self.take()
            return MultiPoly.var(t.text)
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                self.fail("')'")
            return inner
        self.fail("a number, variable or '('")


def parse_polynomial(text: str, variables=DEFAULT_VARIABLES) -> MultiPoly:
    """Exact polynomial denoted by ``text``."""
    return _Parser(text, variables).parse()


def parse_scalar(text: str):
    """A rational constant written in the polynomial grammar, e.g. ``-1/2``."""
    P = parse_polynomial(text, ())
    return P.constant_value()
