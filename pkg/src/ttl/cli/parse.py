"""Parser for univariate polynomial expressions in x.

Grammar (whitespace allowed between tokens)::

    poly  := [sign] term (sign term)*
    term  := coeff [['*'] mono] | mono
    mono  := 'x' ['^' int]
    coeff := int ['/' int]
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ParseError
from ..exact import Polynomial


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self) -> None:
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def fail(self, expectation: str):
        self.skip()
        raise ParseError(self.i, expectation, self.text)

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.fail("an integer")
        return int(self.text[start:self.i])


def _mono(sc: _Scanner) -> int:
    sc.i += 1  # the 'x'
    if sc.peek() == "^":
        sc.i += 1
        return sc.integer()
    return 1


def _term(sc: _Scanner) -> tuple[Fraction, int]:
    ch = sc.peek()
    if ch == "x":
        return Fraction(1), _mono(sc)
    if not ch.isdigit():
        sc.fail("a term (number or x)")
    c = Fraction(sc.integer())
    if sc.peek() == "/":
        sc.i += 1
        pos = sc.i
        den = sc.integer()
        if den == 0:
            raise ParseError(pos, "a nonzero denominator", sc.text)
        c /= den
    ch = sc.peek()
    if ch == "*":
        sc.i += 1
        if sc.peek() != "x":
            sc.fail("x")
        return c, _mono(sc)
    if ch == "x":
        return c, _mono(sc)
    return c, 0


def parse_poly(text: str) -> Polynomial:
    sc = _Scanner(text)
    terms: dict[int, Fraction] = {}
    sign = 1
    ch = sc.peek()
    if ch and ch in "+-":
        sign = -1 if ch == "-" else 1
        sc.i += 1
    while True:
        c, k = _term(sc)
        terms[k] = terms.get(k, Fraction(0)) + sign * c
        ch = sc.peek()
        if not ch:
            break
        if ch not in "+-":
            sc.fail("'+', '-' or end of input")
        sign = -1 if ch == "-" else 1
        sc.i += 1
    if not terms:
        return Polynomial()
    cs = [Fraction(0)] * (max(terms) + 1)
    for k, c in terms.items():
        cs[k] += c
    return Polynomial(cs)
