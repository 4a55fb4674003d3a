"""Evaluation at integer points and exact interpolation.

Sample points are the integers 0, 1, 2, ... in order, skipping the points a
caller declares bad.  When the retained points are consecutive, the
interpolant is built from integer forward differences and a Newton-form
Horner expansion on integers, which avoids rational gcds entirely.  Other
point sets fall back to divided differences over Q.
"""

from __future__ import annotations

from math import factorial, lcm
from typing import Callable, Sequence

from gmpy2 import mpq, mpz

from .polynomials import UniPoly

__all__ = ["interpolate", "sample_and_interpolate", "SamplingReport"]


def interpolate(points: Sequence[int], values: Sequence) -> UniPoly:
    """The unique polynomial of degree < len(points) through the samples."""
    n = len(points)
    if n != len(values):
        raise ValueError("points and values differ in length")
    if n == 0:
        return UniPoly()
    if len(set(points)) != n:
        raise ValueError("interpolation points must be distinct")
    x0 = points[0]
    if all(isinstance(p, int) for p in points) and list(points) == list(range(x0, x0 + n)):
        return _interpolate_consecutive(x0, values)
    return _interpolate_divided(points, values)


def _interpolate_consecutive(x0: int, values) -> UniPoly:
    n = len(values)
    vals = [mpq(v) for v in values]
    den = lcm(*(int(v.denominator) for v in vals))
    diffs = [mpz(v.numerator) * (den // int(v.denominator)) for v in vals]
    # leading entries of the forward-difference table
    lead = [diffs[0]]
    for k in range(1, n):
        diffs = [diffs[i + 1] - diffs[i] for i in range(n - k)]
        lead.append(diffs[0])
    if not any(lead):
        return UniPoly()
    top = max(k for k, v in enumerate(lead) if v)
    # p(x) = sum_k lead[k] * (x - x0)^(k falling) / k!, scaled by top!
    scale = factorial(top)
    acc = [lead[top]]
    for k in range(top - 1, -1, -1):
        # acc <- acc * (x - x0 - k) + lead[k] * top!/k!
        shift = x0 + k
        nxt = [mpz(0)] * (len(acc) + 1)
        for i, a in enumerate(acc):
            nxt[i + 1] += a
            nxt[i] -= a * shift
        nxt[0] += lead[k] * (scale // factorial(k))
        acc = nxt
    total = mpz(scale) * den
    return UniPoly([mpq(a, total) for a in acc])


def _interpolate_divided(points, values) -> UniPoly:
    xs = [mpq(p) for p in points]
    coef = [mpq(v) for v in values]
    n = len(xs)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - k])
    acc = UniPoly((coef[-1],))
    for k in range(n - 2, -1, -1):
        acc = acc * UniPoly((-xs[k], 1)) + coef[k]
    return acc


class SamplingReport:
    """Which integer points were used and which were skipped."""

    __slots__ = ("used", "skipped")

    def __init__(self):
        self.used: list[int] = []
        self.skipped: list[int] = []

    def __repr__(self):
        return f"SamplingReport(used={len(self.used)}, skipped={self.skipped})"


def sample_and_interpolate(
    evaluate: Callable[[int], Sequence],
    degree_bound: int,
    is_bad: Callable[[int], bool] | None = None,
    check: bool = True,
    report: SamplingReport | None = None,
) -> list[UniPoly]:
    """Interpolate a vector of polynomials of degree <= ``degree_bound``.

    ``evaluate(x0)`` returns the vector of values at the integer ``x0``.
    With ``check`` set, one extra point is sampled and compared against the
    interpolants; a mismatch means the degree bound was wrong and raises.
    """
    if degree_bound < 0:
        degree_bound = 0
    need = degree_bound + 1 + (1 if check else 0)
    report = report if report is not None else SamplingReport()
    samples = []
    x0 = 0
    while len(samples) < need:
        if is_bad is not None and is_bad(x0):
            report.skipped.append(x0)
        else:
            samples.append((x0, list(evaluate(x0))))
            report.used.append(x0)
        x0 += 1
    width = len(samples[0][1])
    if any(len(v) != width for _, v in samples):
        raise ValueError("evaluation returned vectors of varying length")
    fit = samples[: degree_bound + 1]
    pts = [p for p, _ in fit]
    polys = [interpolate(pts, [v[c] for _, v in fit]) for c in range(width)]
    if check:
        xc, vc = samples[-1]
        for p, v in zip(polys, vc):
            if p(xc) != v:
                raise ArithmeticError("degree bound violated during interpolation")
    return polys
