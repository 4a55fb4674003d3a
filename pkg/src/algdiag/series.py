"""Truncated power series over an exact field, and Newton sums of polynomials.

A :class:`TruncatedSeries` knows its coefficients modulo ``x^order`` and
nothing beyond.  Binary operations truncate to the smaller order.  All
algorithms here are the quadratic schoolbook ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from gmpy2 import mpq

from .fields import QQ
from .polynomials import UniPoly, reciprocal

__all__ = [
    "TruncatedSeries",
    "NewtonSeries",
    "series_inverse",
    "series_exp",
    "series_log",
    "series_integrate",
    "hadamard",
    "newton_series",
    "poly_from_newton",
]


# -- list kernels -------------------------------------------------------------


def mul_trunc(a: Sequence, b: Sequence, n: int, zero):
    out = [zero] * n
    for i, u in enumerate(a[:n]):
        if not u:
            continue
        for j, v in enumerate(b[: n - i]):
            if v:
                out[i + j] = out[i + j] + u * v
    return out


def inv_trunc(a: Sequence, n: int, zero, one):
    if not a or not a[0]:
        raise ZeroDivisionError("series not invertible: constant term is zero")
    inv0 = one / a[0]
    out = [zero] * n
    if n == 0:
        return out
    out[0] = inv0
    for k in range(1, n):
        acc = zero
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j]:
                acc = acc + a[j] * out[k - j]
        out[k] = -(acc * inv0)
    return out


def div_trunc(num: Sequence, den: Sequence, n: int, zero, one):
    """``num / den`` mod x^n by the quotient recurrence; cost O(n * len(den))."""
    if not den or not den[0]:
        raise ZeroDivisionError("series not invertible: constant term is zero")
    inv0 = one / den[0]
    out = [zero] * n
    for k in range(n):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, len(den) - 1) + 1):
            if den[j]:
                acc = acc - den[j] * out[k - j]
        out[k] = acc * inv0
    return out


def exp_trunc(a: Sequence, n: int, zero, one):
    """``exp(a)`` mod x^n for a with zero constant term: k E_k = sum j a_j E_{k-j}."""
    if a and a[0]:
        raise ValueError(f"exp needs a zero constant term, got {a[0]}")
    out = [zero] * n
    if n == 0:
        return out
    out[0] = one
    ja = [j * a[j] if j < len(a) else zero for j in range(n)]
    for k in range(1, n):
        acc = zero
        for j in range(1, k + 1):
            if ja[j]:
                acc = acc + ja[j] * out[k - j]
        out[k] = acc / k
    return out


def integrate_list(a: Sequence, zero):
    return [zero] + [v / (k + 1) for k, v in enumerate(a)]


def derivative_list(a: Sequence):
    return [k * v for k, v in enumerate(a)][1:]


# -- series values --------------------------------------------------------------


class TruncatedSeries:
    """Power series known modulo ``x^order`` over an exact field."""

    __slots__ = ("field", "coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int | None = None, field=QQ):
        order = len(coeffs) if order is None else order
        if order < 0:
            raise ValueError("negative truncation order")
        cs = [field.convert(v) for v in list(coeffs)[:order]]
        cs += [field.zero] * (order - len(cs))
        self.field = field
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def _raw(cls, coeffs, order, field) -> "TruncatedSeries":
        s = object.__new__(cls)
        s.field, s.coeffs, s.order = field, tuple(coeffs), order
        return s

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    def __len__(self):
        return self.order

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.field != self.field:
            raise ValueError(f"coefficient fields differ: {self.field} vs {other.field}")
        return min(self.order, other.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.field == other.field and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        n = self._check(other)
        return TruncatedSeries._raw([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n, self.field)

    def __sub__(self, other):
        n = self._check(other)
        return TruncatedSeries._raw([a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n, self.field)

    def __neg__(self):
        return TruncatedSeries._raw([-a for a in self.coeffs], self.order, self.field)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._check(other)
            return TruncatedSeries._raw(mul_trunc(self.coeffs, other.coeffs, n, self.field.zero), n, self.field)
        s = self.field.convert(other)
        return TruncatedSeries._raw([a * s for a in self.coeffs], self.order, self.field)

    __rmul__ = __mul__

    def truncate(self, n: int) -> "TruncatedSeries":
        if n > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries._raw(self.coeffs[:n], n, self.field)

    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by x^k; the first k coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError("series is not divisible by x^%d" % k)
        return TruncatedSeries._raw(self.coeffs[k:], self.order - k, self.field)

    def scale_variable(self, c) -> "TruncatedSeries":
        """f(c x)."""
        c = self.field.convert(c)
        out, p = [], self.field.one
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return TruncatedSeries._raw(out, self.order, self.field)

    def derivative(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(derivative_list(self.coeffs), max(self.order - 1, 0), self.field)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs[:12])
        more = ", ..." if self.order > 12 else ""
        return f"TruncatedSeries([{body}{more}], order={self.order}, field={self.field!r})"


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """1/f mod x^order."""
    if not f.order:
        return f
    if not f.coeffs[0]:
        raise ZeroDivisionError("series not invertible: constant term is zero")
    return TruncatedSeries._raw(inv_trunc(f.coeffs, f.order, f.field.zero, f.field.one), f.order, f.field)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    if f.order and f.coeffs[0]:
        raise ValueError(f"exp needs a zero constant term, got {f.coeffs[0]}")
    return TruncatedSeries._raw(exp_trunc(f.coeffs, f.order, f.field.zero, f.field.one), f.order, f.field)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    if f.order and f.coeffs[0] != f.field.one:
        raise ValueError(f"log needs constant term 1, got {f.coeffs[0]}")
    if f.order <= 1:
        return TruncatedSeries._raw([f.field.zero] * f.order, f.order, f.field)
    zero, one = f.field.zero, f.field.one
    q = div_trunc(derivative_list(f.coeffs), f.coeffs, f.order - 1, zero, one)
    return TruncatedSeries._raw(integrate_list(q, zero), f.order, f.field)


def series_integrate(f: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative with zero constant term; the order grows by one."""
    return TruncatedSeries._raw(integrate_list(f.coeffs, f.field.zero), f.order + 1, f.field)


def hadamard(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise product."""
    n = f._check(g)
    return TruncatedSeries._raw([a * b for a, b in zip(f.coeffs[:n], g.coeffs[:n])], n, f.field)


def exp_series(order: int) -> TruncatedSeries:
    """exp(x) = sum x^k / k!."""
    return TruncatedSeries._raw([mpq(1, factorial(k)) for k in range(order)], order, QQ)


def factorial_series(order: int) -> TruncatedSeries:
    """sum k! x^k."""
    return TruncatedSeries._raw([mpq(factorial(k)) for k in range(order)], order, QQ)


# -- Newton sums ---------------------------------------------------------------


@dataclass(frozen=True)
class NewtonSeries:
    """Generating series sum_k p_k x^k of the power sums p_k of a polynomial's roots."""

    inner: TruncatedSeries

    @property
    def order(self) -> int:
        return self.inner.order

    def __getitem__(self, k):
        return self.inner[k]

    def __add__(self, other: "NewtonSeries") -> "NewtonSeries":
        return NewtonSeries(self.inner + other.inner)


def newton_series(p: UniPoly, n: int) -> NewtonSeries:
    """Power sums of the roots of ``p`` (with multiplicity), mod x^n."""
    if not p:
        raise ValueError("Newton sums of the zero polynomial are undefined")
    d = p.degree
    rp = list(reciprocal(p).coeffs) if d > 0 else [p.leading]
    rp += [mpq(0)] * (d + 1 - len(rp))
    # rec(P') taken wrt deg P - 1: coefficient k is (d - k) a_{d-k}
    rdp = [(d - k) * p[d - k] for k in range(d)]
    coeffs = div_trunc(rdp, rp, n, mpq(0), mpq(1))
    return NewtonSeries(TruncatedSeries._raw(coeffs, n, QQ))


def poly_from_newton(newton: NewtonSeries, d: int) -> UniPoly:
    """The monic polynomial of degree ``d`` whose Newton series agrees mod x^{d+1}."""
    if newton.order < d + 1:
        raise ValueError("insufficient Newton sums")
    s = newton.inner.coeffs
    if s[0] != d:
        raise ValueError(f"Newton series has constant term {s[0]}, expected the degree {d}")
    return UniPoly(reversed(_rec_from_power_sums(s, d, mpq(0), mpq(1))))


def _rec_from_power_sums(s, d, zero, one):
    """exp(integral (d - N)/y) mod y^{d+1}: the reversed monic polynomial."""
    g = [zero] + [-s[k] / k for k in range(1, d + 1)]
    return exp_trunc(g, d + 1, zero, one)
