"""Unidimensional lattice walks with steps (1, u).

Counting is done two ways: by unrolling the recurrence
w[n][k] = sum_u w[n-1][k-u] (optionally forbidding negative altitudes),
and through generating-series identities

    B(x) = sum_n [y^0] G(y)^n,          E(x) = exp(int (B(x) - 1)/x),
    A(x) = sum_n sum_{k<0} [y^k] G(y)^n, M(x) = exp(-int A(x)/x) / (1 - x G(1)),

where G is the characteristic Laurent polynomial of the step set.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .series import TruncatedSeries, exp_trunc

__all__ = [
    "StepSet",
    "WalkTable",
    "walk_counts",
    "bridges_series",
    "excursions_series",
    "negative_altitude_series",
    "meanders_series",
]


@dataclass(frozen=True)
class StepSet:
    """A finite set of steps (1, u), stored as the sorted tuple of the u."""

    steps: tuple

    def __init__(self, steps):
        s = tuple(sorted(set(int(u) for u in steps)))
        if not s:
            raise ValueError("step set is empty")
        object.__setattr__(self, "steps", s)

    @property
    def u_minus(self) -> int:
        return max(0, -self.steps[0])

    @property
    def u_plus(self) -> int:
        return max(0, self.steps[-1])

    @property
    def d(self) -> int:
        return self.u_minus + self.u_plus

    def laurent(self):
        """G(y) as (offset, coefficients): G = y^offset * sum c_i y^i."""
        lo = self.steps[0]
        coeffs = [0] * (self.steps[-1] - lo + 1)
        for u in self.steps:
            coeffs[u - lo] = 1
        return lo, coeffs

    def require_both_directions(self):
        if self.u_minus < 1 or self.u_plus < 1:
            raise ValueError(
                f"step set {list(self.steps)} needs both a negative and a positive step "
                f"(u- = {self.u_minus}, u+ = {self.u_plus})"
            )


@dataclass(frozen=True)
class WalkTable:
    """rows[n] maps an altitude k to the number of length-n walks ending there."""

    rows: tuple
    confined: bool

    def count(self, n: int, k: int) -> int:
        return self.rows[n].get(k, 0)

    def total(self, n: int) -> int:
        return sum(self.rows[n].values())

    def below_zero(self, n: int) -> int:
        return sum(v for k, v in self.rows[n].items() if k < 0)


def walk_counts(steps: StepSet, n: int, confined: bool = False) -> WalkTable:
    """Rows 0..n of the counting recurrence; confined walks never go below 0."""
    if n < 0:
        raise ValueError("number of rows must be nonnegative")
    row = {0: 1}
    rows = [row]
    for _ in range(n):
        nxt: dict = {}
        for k, v in row.items():
            for u in steps.steps:
                j = k + u
                if confined and j < 0:
                    continue
                nxt[j] = nxt.get(j, 0) + v
        row = nxt
        rows.append(row)
    return WalkTable(tuple(rows), confined)


def _laurent_powers(steps: StepSet, n: int):
    """Yield (offset, coefficients) of G^k for k = 0..n-1."""
    lo, g = steps.laurent()
    off, cur = 0, [1]
    for _ in range(n):
        yield off, cur
        nxt = [0] * (len(cur) + len(g) - 1)
        for i, a in enumerate(cur):
            for j, b in enumerate(g):
                if b:
                    nxt[i + j] += a * b
        off, cur = off + lo, nxt


def bridges_series(steps: StepSet, n: int) -> TruncatedSeries:
    """Walks ending at altitude 0, counted by [y^0] G(y)^k."""
    steps.require_both_directions()
    out = []
    for off, cur in _laurent_powers(steps, n):
        out.append(cur[-off] if 0 <= -off < len(cur) else 0)
    return TruncatedSeries(out, n)


def negative_altitude_series(steps: StepSet, n: int) -> TruncatedSeries:
    """Walks ending at a negative altitude: sum_{k<0} [y^k] G(y)^n."""
    if steps.u_minus < 1:
        raise ValueError(f"step set {list(steps.steps)} has no negative step")
    out = []
    for off, cur in _laurent_powers(steps, n):
        out.append(sum(cur[: max(0, min(-off, len(cur)))]))
    return TruncatedSeries(out, n)


def _exp_integral(a: TruncatedSeries, sign: int) -> list:
    """exp(sign * int a(x)/x dx) for a with a(0) = 0."""
    if a.order and a[0]:
        raise ValueError("series must vanish at 0")
    g = [mpq(0)] + [sign * a[k] / k for k in range(1, a.order)]
    return exp_trunc(g, a.order, mpq(0), mpq(1))


def _assert_integral(coeffs, what: str):
    for k, v in enumerate(coeffs):
        if v.denominator != 1:
            raise ArithmeticError(f"{what} coefficient {k} is not an integer: {v}")


def excursions_series(steps: StepSet, n: int) -> TruncatedSeries:
    """Confined walks returning to 0: E = exp(int (B - 1)/x)."""
    b = bridges_series(steps, n)
    shifted = TruncatedSeries([mpq(0)] + list(b.coeffs[1:]), n)
    e = _exp_integral(shifted, 1)
    _assert_integral(e, "excursion")
    return TruncatedSeries(e, n)


def meanders_series(steps: StepSet, n: int) -> TruncatedSeries:
    """Confined walks with free endpoint: M = exp(-int A/x) / (1 - |S| x)."""
    steps.require_both_directions()
    a = negative_altitude_series(steps, n)
    e = _exp_integral(a, -1)
    size = len(steps.steps)
    # division by 1 - |S| x is a running weighted prefix sum
    m, acc = [], mpq(0)
    for v in e:
        acc = acc * size + v
        m.append(acc)
    _assert_integral(m, "meander")
    return TruncatedSeries(m, n)
