"""Univariate resultants over Q and bivariate resultants by evaluation-interpolation."""

from __future__ import annotations

from gmpy2 import mpq

from .interpolation import SamplingReport, sample_and_interpolate
from .polynomials import BiPoly, UniPoly, _divmod

__all__ = ["uni_resultant", "resultant_y", "resultant_bound"]

ONE = mpq(1)


def uni_resultant(f: UniPoly, g: UniPoly, deg_f: int | None = None, deg_g: int | None = None) -> mpq:
    """Sylvester resultant of ``f`` and ``g`` with optional formal degrees.

    A formal degree larger than the actual one pads the Sylvester matrix
    with leading zeros, so that this agrees with the specialization of a
    generic resultant whose leading coefficient vanishes at the point.
    """
    n = f.degree if deg_f is None else deg_f
    m = g.degree if deg_g is None else deg_g
    if not f:
        return g.leading**n if (g and m == 0) else mpq(0)
    if not g:
        return f.leading**m if n == 0 else mpq(0)
    nf, mg = f.degree, g.degree
    if nf > n or mg > m:
        raise ValueError("formal degree below the actual degree")
    if nf < n and mg < m:
        return mpq(0)
    if mg == m:
        # Res_{n,m}(f, g) = (-1)^{nm} lc(g)^n prod_{g(b)=0} f(b)
        base = _euclid_resultant(list(f.coeffs), list(g.coeffs))
        extra = n - nf
        sign = -1 if ((n - nf) * m) % 2 else 1
        return sign * g.leading**extra * base
    # f has full degree: Res_{n,m}(f, g) = lc(f)^m prod_{f(a)=0} g(a)
    base = _euclid_resultant(list(f.coeffs), list(g.coeffs))
    return f.leading ** (m - mg) * base


def _euclid_resultant(f: list, g: list) -> mpq:
    """Res(f, g) for nonzero f, g taken with their actual degrees."""
    acc = ONE
    while True:
        n, m = len(f) - 1, len(g) - 1
        if n == 0:
            return acc * f[0] ** m
        if m == 0:
            return acc * g[0] ** n
        if n < m:
            f, g = g, f
            if (n * m) % 2:
                acc = -acc
            continue
        # n >= m: Res(f, g) = (-1)^{nm} lc(g)^{n-k} (-1)^{km} Res(r, g)... with r = f mod g
        _, r = _divmod(f, g)
        if not r:
            return mpq(0)
        k = len(r) - 1
        if ((n - k) * m) % 2:
            acc = -acc
        acc *= g[-1] ** (n - k)
        f = r


def resultant_bound(p: BiPoly, q: BiPoly) -> int:
    """Degree bound in x for Res_y(p, q): d_x^P d_y^Q + d_x^Q d_y^P."""
    return p.deg_x * q.deg_y + q.deg_x * p.deg_y


def resultant_y(p: BiPoly, q: BiPoly, report: SamplingReport | None = None) -> UniPoly:
    """Res_y(p, q) as a polynomial in x, by evaluation-interpolation.

    Integer points where the y-degree of either operand drops are skipped.
    """
    if not p or not q:
        raise ValueError("resultant of a zero polynomial")
    dp, dq = p.deg_y, q.deg_y
    if dp == 0 and dq == 0:
        raise ValueError("both operands are constant in y")
    lp, lq = p.lc_y(), q.lc_y()
    bound = resultant_bound(p, q)

    def bad(x0):
        return not lp(x0) or not lq(x0)

    def value(x0):
        return [uni_resultant(p.eval_x(x0), q.eval_x(x0))]

    (res,) = sample_and_interpolate(value, bound, is_bad=bad, report=report)
    return res
