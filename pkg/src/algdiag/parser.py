"""Parser for rational functions in x and y.

Grammar, loosest binding first::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INTEGER)*
    atom   := INTEGER | 'x' | 'y' | '(' expr ')'

Implicit multiplication is not accepted.  Division may appear anywhere;
the result is reduced to a single fraction A/B.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

from .gcd import bi_gcd
from .polynomials import BiPoly

__all__ = ["ParseError", "parse_ratfun", "parse_poly"]


class ParseError(ValueError):
    """Syntax error; ``offset`` is 1-based."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def _offset(text: str, pos: int) -> int:
    """1-based byte offset of character position ``pos``."""
    return len(text[:pos].encode("utf-8")) + 1


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            name = m.group(2)
            if name not in ("x", "y"):
                raise ParseError(f"unknown variable {name!r}", _offset(text, start))
            toks.append(("var", name, start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", _offset(text, start))
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("eof", None, len(text)))
    return toks


class _Frac:
    """A pair (num, den) of bivariate polynomials, reduced lazily."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        self.num = num
        self.den = BiPoly.constant(1) if den is None else den

    def __add__(self, o):
        if self.den == o.den:
            return _Frac(self.num + o.num, self.den)
        return _Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o):
        return self + (-o)

    def __neg__(self):
        return _Frac(-self.num, self.den)

    def __mul__(self, o):
        return _Frac(self.num * o.num, self.den * o.den)

    def __truediv__(self, o):
        if not o.num:
            raise ZeroDivisionError("denominator is zero")
        return _Frac(self.num * o.den, self.den * o.num)

    def __pow__(self, e: int):
        return _Frac(self.num**e, self.den**e)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, what: str):
        kind, val, pos = self.peek()
        found = "end of input" if kind == "eof" else repr(str(val))
        raise ParseError(f"expected {what}, found {found}", _offset(self.text, pos))

    def expr(self) -> _Frac:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> _Frac:
        acc = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary(self) -> _Frac:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> _Frac:
        base = self.atom()
        while self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind == "-":
                raise ParseError("negative exponents are not allowed", _offset(self.text, pos))
            if kind != "int":
                self.fail("a nonnegative integer exponent")
            self.take()
            base = base**val
        return base

    def atom(self) -> _Frac:
        kind, val, _ = self.peek()
        if kind == "int":
            self.take()
            return _Frac(BiPoly.constant(val))
        if kind == "var":
            self.take()
            return _Frac(BiPoly.x() if val == "x" else BiPoly.y())
        if kind == "(":
            self.take()
            inner = self.expr()
            if self.peek()[0] != ")":
                self.fail("')'")
            self.take()
            return inner
        self.fail("a number, a variable or '('")

    def parse(self) -> _Frac:
        if self.peek()[0] == "eof":
            self.fail("an expression")
        out = self.expr()
        if self.peek()[0] != "eof":
            self.fail("an operator or end of input")
        return out


def parse_ratfun(text: str):
    """Parse ``text`` into a reduced pair (A, B) with A/B equal to the expression.

    The common factor of A and B is removed and B is scaled so that its
    first nonzero coefficient, in lexicographic order of (i, j), is 1.
    """
    f = _Parser(text).parse()
    a, b = f.num, f.den
    if not b:
        raise ZeroDivisionError("denominator is zero")
    if a:
        g = bi_gcd(a, b)
        if g.deg_x > 0 or g.deg_y > 0:
            a, b = a.exact_div(g), b.exact_div(g)
    else:
        b = BiPoly.constant(1)
    first = next(v for _, _, v in b.terms())
    s = mpq(1) / first
    return a * s, b * s


def parse_poly(text: str) -> BiPoly:
    """Parse a polynomial; raises ``ValueError`` if the expression is not one."""
    a, b = parse_ratfun(text)
    if b.deg_x > 0 or b.deg_y > 0:
        raise ValueError("expression is not a polynomial")
    return a * (1 / b.coeff(0, 0))
