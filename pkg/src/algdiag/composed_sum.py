"""Composed sums: the polynomial whose roots are the sums of ``c`` roots of P.

For P with roots a_1..a_d, the composed sum is the monic product over all
c-subsets I of ``y - sum_{i in I} a_i``.  It is computed from Newton sums:
with S the exponential generating series of the power sums of P,

    prod_i (1 + z exp(a_i y)) = exp(sum_m (-1)^(m-1) S(m y) z^m / m),

and the coefficient of z^c is the exponential generating series of the
power sums of the composed sum.  Over Q[x] the same computation is done at
integer values of x and interpolated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from gmpy2 import mpq, mpz

from .interpolation import SamplingReport, sample_and_interpolate
from .polynomials import BiPoly, UniPoly, canonical, integer_primitive_scale
from .series import NewtonSeries, TruncatedSeries, mul_trunc, newton_series, poly_from_newton

__all__ = ["ComposedSumResult", "pure_composed_sum", "composed_sum_xy", "composed_sum_bounds"]


def _check_c(c: int, d: int):
    if not isinstance(c, int) or c < 1 or c > d:
        raise ValueError(f"c = {c} out of range: need 1 <= c <= {d}")


def _subset_power_sums(g, c: int, n: int):
    """Coefficients of [z^c] exp(sum_m g_m z^m / m) mod y^n, given j*g_j series.

    ``g[j]`` holds the series ``(-1)^(j-1) S(j y)`` for j = 1..c.
    """
    zero = mpq(0)
    e = [[mpq(1)] + [zero] * (n - 1)]
    for k in range(1, c + 1):
        acc = [zero] * n
        for j in range(1, k + 1):
            prod = mul_trunc(g[j], e[k - j], n, zero)
            acc = [a + b for a, b in zip(acc, prod)]
        e.append([v / k for v in acc])
    return e[c]


def pure_composed_sum(p: UniPoly, c: int) -> UniPoly:
    """Monic polynomial of degree C(deg p, c) vanishing at all sums of c roots of ``p``."""
    if not p:
        raise ValueError("composed sum of the zero polynomial")
    d = p.degree
    _check_c(c, d)
    big_d = comb(d, c)
    n = big_d + 1
    newton = newton_series(p, n).inner.coeffs
    s = [newton[k] / factorial(k) for k in range(n)]
    g = [None]
    for m in range(1, c + 1):
        sign = 1 if m % 2 else -1
        g.append([sign * mpq(m) ** k * s[k] for k in range(n)])
    ec = _subset_power_sums(g, c, n)
    sums = [ec[k] * factorial(k) for k in range(n)]
    return poly_from_newton(NewtonSeries(TruncatedSeries(sums, n)), big_d)


# -- integer kernel -------------------------------------------------------------


def _int_power_sums(w: list, n: int) -> list:
    """Power sums p_0..p_{n-1} of the roots of a monic integer polynomial.

    ``w`` lists coefficients lowest degree first, with ``w[d] = 1``.
    """
    d = len(w) - 1
    p = [mpz(d)] + [mpz(0)] * (n - 1)
    for k in range(1, n):
        acc = -k * w[d - k] if k <= d else mpz(0)
        for i in range(1, min(k - 1, d) + 1):
            acc -= w[d - i] * p[k - i]
        p[k] = acc
    return p


def _int_subset_power_sums(p: list, c: int, n: int) -> list:
    """q_k = sum over c-subsets I of (sum_{i in I} a_i)^k, for k < n.

    Exponential convolutions keep everything integral: with e_{m,k} the
    analogous sums over m-subsets,
    m e_{m,k} = sum_j (-1)^(j-1) sum_l C(k,l) j^l p_l e_{m-j,k-l}.
    """
    binom = [[comb(k, l) for l in range(k + 1)] for k in range(n)]
    e = [[mpz(1)] + [mpz(0)] * (n - 1)]
    for m in range(1, c + 1):
        row = []
        for k in range(n):
            acc = mpz(0)
            bk = binom[k]
            for j in range(1, m + 1):
                prev = e[m - j]
                jl = mpz(1)
                part = mpz(0)
                for l in range(k + 1):
                    part += bk[l] * jl * p[l] * prev[k - l]
                    jl *= j
                acc += part if j % 2 else -part
            q, r = divmod(acc, m)
            if r:
                raise ArithmeticError("non-integral subset power sum")
            row.append(q)
        e.append(row)
    return e[c]


def _int_poly_from_power_sums(q: list, big_d: int) -> list:
    """Monic integer polynomial (lowest degree first) from its power sums."""
    sigma = [mpz(1)]
    for k in range(1, big_d + 1):
        acc = mpz(0)
        for i in range(1, k + 1):
            term = sigma[k - i] * q[i]
            acc += term if i % 2 else -term
        s, r = divmod(acc, k)
        if r:
            raise ArithmeticError("non-integral elementary symmetric function")
        sigma.append(s)
    return [sigma[big_d - j] if (big_d - j) % 2 == 0 else -sigma[big_d - j] for j in range(big_d + 1)]


def _scaled_composed_sum_at(coeffs: list, c: int, big_d: int, lead_power: int) -> list:
    """Coefficients of a0^lead_power * Sigma_c P0 for an integer P0 with lc a0."""
    d = len(coeffs) - 1
    a0 = coeffs[-1]
    # W0(w) = a0^(d-1) P0(w / a0) is monic with integer coefficients; its roots are a0 * roots
    w = [coeffs[j] * a0 ** (d - 1 - j) for j in range(d)] + [mpz(1)]
    p = _int_power_sums(w, big_d + 1)
    q = _int_subset_power_sums(p, c, big_d + 1)
    s = _int_poly_from_power_sums(q, big_d)
    out = []
    for j, v in enumerate(s):
        e = j + lead_power - big_d
        out.append(mpq(v * a0**e) if e >= 0 else mpq(v, a0 ** (-e)))
    return out


# -- bivariate driver -------------------------------------------------------------


@dataclass(frozen=True)
class ComposedSumResult:
    """``a(x)^{D_x} * Sigma_c P`` in canonical form, with its degree data.

    ``poly = scale * raw`` where ``raw`` is the un-normalized product
    ``a^{lead_power_used} * Sigma_c P``.
    """

    poly: BiPoly
    c: int
    D_x: int
    D_y: int
    lead_power_used: int
    scale: mpq = mpq(1)
    skipped_points: tuple = ()
    sample_count: int = 0
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def raw(self) -> BiPoly:
        return self.poly * (1 / self.scale)


def composed_sum_bounds(d_x: int, d_y: int, c: int) -> tuple[int, int]:
    """(D_x, D_y) = (C(d_y - 1, c - 1), C(d_y, c))."""
    return comb(d_y - 1, c - 1), comb(d_y, c)


def composed_sum_xy(p: BiPoly, c: int, check: bool = True) -> ComposedSumResult:
    """``a^{D_x} Sigma_c P`` for P in Q[x][y] with leading coefficient a(x) wrt y.

    Sampled at the integers where a does not vanish and interpolated in x
    from 1 + d_x D_x points (plus one verification point when ``check``).
    """
    if not p or p.deg_y < 1:
        raise ValueError("composed sum needs a polynomial of positive degree in the root variable")
    d_x, d_y = p.deg_x, p.deg_y
    _check_c(c, d_y)
    big_dx, big_dy = composed_sum_bounds(d_x, d_y, c)
    # integer coefficients do not change the roots; track the factor for `raw`
    s0 = integer_primitive_scale([v for _, _, v in p.terms()])
    pint = p * s0
    ycs = pint.y_coeffs()
    lead = ycs[-1]
    report = SamplingReport()

    def value(x0):
        row = [mpz(int(cf(x0))) for cf in ycs]
        return _scaled_composed_sum_at(row, c, big_dy, big_dx)

    polys = sample_and_interpolate(value, d_x * big_dx, is_bad=lambda x0: not lead(x0), check=check, report=report)
    raw = BiPoly.from_y_coeffs(polys)
    if raw.deg_y != big_dy:
        raise ArithmeticError(f"composed sum has degree {raw.deg_y}, expected {big_dy}")
    if raw.deg_x > d_x * big_dx:
        raise ArithmeticError("composed sum exceeds its x-degree bound")
    # raw is (s0 a)^{D_x} Sigma_c P; undo the s0 factor in the recorded raw object
    raw_true = raw * (1 / mpq(s0) ** big_dx)
    canon = canonical(raw_true)
    scale = _ratio(canon, raw_true)
    return ComposedSumResult(
        poly=canon,
        c=c,
        D_x=big_dx,
        D_y=big_dy,
        lead_power_used=big_dx,
        scale=scale,
        skipped_points=tuple(report.skipped),
        sample_count=len(report.used),
    )


def _ratio(a: BiPoly, b: BiPoly) -> mpq:
    """The scalar s with a = s * b (b nonzero)."""
    for i, j, v in b.terms():
        return a.coeff(i, j) / v
    raise ValueError("zero polynomial")
