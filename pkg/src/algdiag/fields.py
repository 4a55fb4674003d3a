"""Exact coefficient fields for truncated power series.

A field object supplies ``zero``, ``one`` and ``from_int``; its elements
support ``+ - * /`` (including division by Python integers) and ``==``.
Two fields are provided: the rationals, and univariate rational functions
over the rationals.
"""

from __future__ import annotations

from gmpy2 import mpq

from .gcd import uni_gcd
from .polynomials import UniPoly, format_unipoly

__all__ = ["QQ", "RationalField", "RatFun", "RationalFunctionField"]


class RationalField:
    name = "QQ"
    zero = mpq(0)
    one = mpq(1)

    def from_int(self, k: int) -> mpq:
        return mpq(k)

    def convert(self, v) -> mpq:
        return mpq(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class RatFun:
    """Reduced fraction of univariate polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = num if isinstance(num, UniPoly) else UniPoly.constant(num)
        den = UniPoly((1,)) if den is None else (den if isinstance(den, UniPoly) else UniPoly.constant(den))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = UniPoly((1,))
            else:
                g = uni_gcd(num, den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
                lc = den.leading
                if lc != 1:
                    num, den = num * (1 / lc), den * (1 / lc)
        self.num = num
        self.den = den

    @staticmethod
    def _lift(v) -> "RatFun":
        if isinstance(v, RatFun):
            return v
        if isinstance(v, UniPoly):
            return RatFun(v, _reduced=True)
        return RatFun(UniPoly.constant(v), _reduced=True)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            o = RatFun._lift(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = RatFun._lift(other)
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFun._lift(other))

    def __rsub__(self, other):
        return RatFun._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, type(mpq(0)))):
            if not other:
                return RatFun(UniPoly(), _reduced=True)
            return RatFun(self.num * other, self.den, _reduced=True)
        o = RatFun._lift(other)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, type(mpq(0)))):
            if not other:
                raise ZeroDivisionError("division by zero")
            return RatFun(self.num * (1 / mpq(other)), self.den, _reduced=True)
        return self * RatFun._lift(other).inverse()

    def __rtruediv__(self, other):
        return RatFun._lift(other) * self.inverse()

    def __call__(self, x0):
        d = self.den(x0)
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x0) / d

    def format(self, var: str = "t") -> str:
        n = format_unipoly(self.num, var)
        if self.den == UniPoly((1,)):
            return n
        return f"({n})/({format_unipoly(self.den, var)})"

    def __repr__(self):
        return f"RatFun({self.format('x')})"


class RationalFunctionField:
    """Q(var) as a coefficient field."""

    def __init__(self, var: str = "x"):
        self.var = var
        self.zero = RatFun(UniPoly(), _reduced=True)
        self.one = RatFun(UniPoly((1,)), _reduced=True)
        self.name = f"QQ({var})"

    def from_int(self, k: int) -> RatFun:
        return RatFun(UniPoly.constant(k), _reduced=True)

    def convert(self, v) -> RatFun:
        return RatFun._lift(v)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name
