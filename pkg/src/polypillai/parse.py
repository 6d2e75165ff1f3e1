"""Recursive-descent parser for polynomial and rational-function expressions.

Grammar (whitespace is insignificant)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' unsigned-integer)?
    base     := rational | 'x' | '(' expr ')'
    rational := integer ['/' positive-integer]

For rational functions ``term`` additionally accepts ``'/' factor``.
Implicit multiplication such as ``3x`` is rejected.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PillaiError
from .function_field import RatFn
from .polycore import Poly


class ParseError(PillaiError):
    code = "parse_error"

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, allow_division: bool):
        self.text = text
        self.pos = 0
        self.allow_division = allow_division

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def _literal_denominator_follows(self) -> bool:
        # '/' directly followed by digits continues a rational literal
        save = self.pos
        ok = self.eat("/") and self.peek().isdigit()
        self.pos = save
        return ok

    def parse(self):
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self):
        negate = self.eat("-")
        value = self.term()
        if negate:
            value = -value
        while True:
            if self.eat("+"):
                value = value + self.term()
            elif self.eat("-"):
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            if self.eat("*"):
                value = value * self.factor()
            elif self.peek() == "/":
                if not self.allow_division:
                    self.error("division is only allowed inside rational literals")
                self.pos += 1
                divisor = self.factor()
                if divisor.is_zero():
                    self.error("division by zero")
                value = value / divisor
            else:
                return value

    def factor(self):
        value = self.base()
        if self.eat("^"):
            if not self.peek().isdigit():
                self.error("exponent must be an unsigned integer")
            e = self.integer()
            if not self.allow_division and self._literal_denominator_follows():
                self.error("non-integer exponents are not allowed")
            value = value ** e
        return value

    def base(self):
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            if self._literal_denominator_follows():
                self.eat("/")
                den = self.integer()
                if den == 0:
                    self.error("zero denominator in rational literal")
                return self.wrap(Fraction(num, den))
            return self.wrap(Fraction(num))
        if ch == "x":
            self.pos += 1
            return self.wrap(Poly.x())
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if not self.eat(")"):
                self.error("expected ')'")
            return value
        if ch == "":
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")

    def wrap(self, v):
        p = v if isinstance(v, Poly) else Poly.const(v)
        return RatFn(p) if self.allow_division else p


def parse_poly(text: str) -> Poly:
    """Parse an exact polynomial in ``x``.

    >>> str(parse_poly("(x+1)^2 - (x-1)^2"))
    '4*x'
    """
    return _Parser(text, allow_division=False).parse()


def parse_ratfn(text: str) -> RatFn:
    """Parse a rational function; ``/`` may divide arbitrary factors."""
    return _Parser(text, allow_division=True).parse()


def parse_rational(text: str) -> Fraction:
    p = parse_poly(text)
    if p.degree > 0:
        raise ParseError("expected a rational constant", text, 0)
    return p[0]
