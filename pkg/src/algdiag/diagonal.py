"""Annihilating polynomials for diagonals of bivariate rational functions.

The diagonal of F = A/B is the sum of the residues of (1/y) F(t/y, y) at
its small branches, the poles y(t) that tend to 0 with t.  An annihilator
of all residues is computed first, then the composed sum over c of its
roots, c being the number of small branches.  When the substituted
function also has a pole at y = 0, its (rational) residue there is added
back by a translation of the unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from gmpy2 import mpq

from .composed_sum import composed_sum_xy
from .fields import RatFun, RationalFunctionField
from .gcd import bi_gcd, primitive_part_y, squarefree_decomposition, uni_squarefree_part
from .interpolation import interpolate, sample_and_interpolate
from .polynomials import MINUS_INFINITY, BiPoly, UniPoly, canonical
from .residues import algebraic_residues
from .resultants import uni_resultant
from .series import TruncatedSeries, div_trunc, mul_trunc

__all__ = [
    "DiagDegrees",
    "DegreeReport",
    "DiagonalAnnihilator",
    "diag_degrees",
    "to_residue_form",
    "small_branch_count",
    "residue_at_origin",
    "algebraic_diagonal",
    "sloped_diagonal",
    "diagonal_series",
    "annihilation_check",
    "degree_bounds",
]


@dataclass(frozen=True)
class DiagDegrees:
    """sup(i - j) and sup(j - i) over the support."""

    ddeg_minus: object
    ddeg_plus: object


@dataclass(frozen=True)
class DegreeReport:
    deg_t: object
    deg_delta: object
    delta_bound: int
    t_bound: int
    D_x: int
    D_y: int


@dataclass(frozen=True)
class DiagonalAnnihilator:
    """Canonical Phi(t, D) with Phi(t, Diag F(t)) = 0, and how it was obtained."""

    phi: BiPoly
    c_small: int
    alpha: int
    origin_residue: RatFun | None
    degree_report: DegreeReport
    residue_poly: BiPoly | None = None


def diag_degrees(p: BiPoly) -> DiagDegrees:
    if not p:
        return DiagDegrees(MINUS_INFINITY, MINUS_INFINITY)
    lo = max(i - j for i, j, _ in p.terms())
    hi = max(j - i for i, j, _ in p.terms())
    return DiagDegrees(lo, hi)


def _check_origin(b: BiPoly):
    if not b:
        raise ZeroDivisionError("denominator is zero")
    if not b.coeff(0, 0):
        raise ValueError("denominator vanishes at origin")


def _substitute(p: BiPoly) -> BiPoly:
    """y^ddeg-(p) * p(t/y, y), as a polynomial in (t, y)."""
    lo = diag_degrees(p).ddeg_minus
    return BiPoly.from_dict({(i, j - i + lo): v for i, j, v in p.terms()})


def to_residue_form(a: BiPoly, b: BiPoly):
    """(P, Q, alpha) with (1/y) (A/B)(t/y, y) = y^alpha P/Q and Q(t, 0) != 0."""
    _check_origin(b)
    if not a:
        raise ValueError("zero numerator: the diagonal is 0")
    alpha = diag_degrees(b).ddeg_minus - diag_degrees(a).ddeg_minus - 1
    return _substitute(a), _substitute(b), alpha


def _full_squarefree_part(b: BiPoly) -> BiPoly:
    dec = squarefree_decomposition(b)
    cont = dec.content
    star = dec.squarefree_part()
    if cont.degree > 0:
        star = star * uni_squarefree_part(cont)
    return star


def _nsmall(pstar: BiPoly) -> int:
    """val_y of the lowest x-coefficient of a square-free polynomial."""
    row = pstar.x_coeffs()
    k = next(i for i, r in enumerate(row) if r)
    return row[k].valuation


def small_branch_count(b: BiPoly) -> int:
    """Number of small branches of the substituted denominator: Nsmall(B*) + ddeg-(B*)."""
    _check_origin(b)
    star = _full_squarefree_part(b)
    return _nsmall(star) + diag_degrees(star).ddeg_minus


def degree_bounds(a: BiPoly, b: BiPoly):
    """(D_x, D_y, c) for the degree bounds on the diagonal annihilator."""
    star = _full_squarefree_part(b)
    dx = max(a.deg_x, b.deg_x, 0)
    dy = max(a.deg_y, b.deg_y, 0)
    dxs, dys = max(star.deg_x, 0), max(star.deg_y, 0)
    dd = diag_degrees(star)
    big_dy = dd.ddeg_minus + dd.ddeg_plus
    big_dx = 2 * dx * (dx + dy + 1) + dx - 2 * (dx - dxs) * (dx - dxs + dy - dys + 1)
    c = _nsmall(star) + dd.ddeg_minus
    return big_dx, big_dy, c


# -- residue at y = 0 ----------------------------------------------------------------


def residue_at_origin(p: BiPoly, q: BiPoly, alpha: int) -> RatFun:
    """Residue of y^alpha P/Q at y = 0: the coefficient of y^(-alpha-1) of P/Q over Q(t)."""
    if alpha >= 0:
        raise ValueError("no pole at the origin: alpha must be negative")
    q0 = q.eval_y(0)
    if not q0:
        raise ValueError("Q(t, 0) must be nonzero")
    field = RationalFunctionField("t")
    n = -alpha
    num = [RatFun(c, _reduced=True) for c in p.y_coeffs()]
    den = [RatFun(c, _reduced=True) for c in q.y_coeffs()]
    quo = div_trunc(num, den, n, field.zero, field.one)
    return quo[n - 1]


# -- pipeline ---------------------------------------------------------------------------


def _remove_t_content(phi: BiPoly) -> BiPoly:
    """Divide out the gcd of the coefficients wrt D, then normalize."""
    return primitive_part_y(phi)


def _translate(phi: BiPoly, r: RatFun) -> BiPoly:
    """Numerator of Phi(t, D - r) for r = p/q, by Horner in D."""
    p, q = r.num, r.den
    lin = BiPoly.from_y_coeffs([-p, q])  # q D - p
    qb = BiPoly._coerce(q)
    coeffs = [BiPoly._coerce(c) for c in phi.y_coeffs()]
    n = len(coeffs) - 1
    acc = coeffs[n]
    qpow = BiPoly.constant(1)
    for k in range(n - 1, -1, -1):
        qpow = qpow * qb
        acc = acc * lin + coeffs[k] * qpow
    return acc


def _report(phi: BiPoly, big_dx: int, big_dy: int, c: int) -> DegreeReport:
    bound = comb(big_dy, c) if big_dy >= c >= 0 else 1
    return DegreeReport(phi.deg_x, phi.deg_y, bound, big_dx * bound, big_dx, big_dy)


def _reduce(a: BiPoly, b: BiPoly):
    g = bi_gcd(a, b)
    if g.deg_x > 0 or g.deg_y > 0:
        a, b = a.exact_div(g), b.exact_div(g)
    return a, b


def algebraic_diagonal(a: BiPoly, b: BiPoly) -> DiagonalAnnihilator:
    """Canonical Phi(t, D) annihilating the diagonal of A/B; requires B(0,0) != 0."""
    _check_origin(b)
    delta = BiPoly.y()
    if not a:
        return DiagonalAnnihilator(delta, 0, 0, None, _report(delta, 0, 0, 0))
    a, b = _reduce(a, b)
    big_dx, big_dy, c = degree_bounds(a, b)
    p, q, alpha = to_residue_form(a, b)
    r = residue_at_origin(p, q, alpha) if alpha < 0 else None

    if c == 0 or q.deg_y < 1:
        if r is None:
            phi = delta
        else:
            phi = canonical(BiPoly.from_y_coeffs([-r.num, r.den]))
        return DiagonalAnnihilator(phi, c, alpha, r, _report(phi, big_dx, big_dy, c))

    if alpha >= 0:
        res = algebraic_residues(p * BiPoly.y() ** alpha, q, q)
    else:
        res = algebraic_residues(p, q * BiPoly.y() ** (-alpha), q)
    phi = composed_sum_xy(res.poly, c).poly
    if r is not None and r:
        phi = _translate(phi, r)
    phi = _remove_t_content(phi)
    rep = _report(phi, big_dx, big_dy, c)
    if phi.deg_y > rep.delta_bound or phi.deg_x > rep.t_bound:
        raise ArithmeticError(f"degree bound violated: {rep}")
    return DiagonalAnnihilator(phi, c, alpha, r, rep, res.poly)


def sloped_diagonal(a: BiPoly, b: BiPoly, p: int, q: int) -> DiagonalAnnihilator:
    """Annihilator of sum_n f_{pn, qn} s^n.

    The diagonal of F(x^q, y^p) is the sloped diagonal evaluated at t^(pq);
    its annihilator Psi(u, D) is turned into one in s = u^(pq) by
    eliminating u with Res_u(Psi(u, D), u^(pq) - s).
    """
    from math import gcd

    if p < 1 or q < 1:
        raise ValueError("slope components must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"slope ({p}, {q}) is not coprime")
    inner = algebraic_diagonal(a.substitute_powers(q, p), b.substitute_powers(q, p))
    if p * q == 1:
        return inner
    psi = inner.phi
    k = p * q
    du, dd = psi.deg_x, psi.deg_y
    out_dd = k * dd
    ds = list(range(out_dd + 1))

    def value(s0):
        g = UniPoly([-s0] + [0] * (k - 1) + [1])
        vals = [uni_resultant(psi.eval_y(d0), g, deg_f=du) for d0 in ds]
        r = interpolate(ds, vals)
        return [r[j] for j in range(out_dd + 1)]

    polys = sample_and_interpolate(value, du, check=True)
    phi = _remove_t_content(BiPoly.from_y_coeffs(polys))
    rep = DegreeReport(phi.deg_x, phi.deg_y, k * inner.degree_report.delta_bound,
                       inner.degree_report.t_bound, inner.degree_report.D_x, inner.degree_report.D_y)
    return DiagonalAnnihilator(phi, inner.c_small, inner.alpha, inner.origin_residue, rep, inner.residue_poly)


# -- series oracles ------------------------------------------------------------------------


def diagonal_series(a: BiPoly, b: BiPoly, n: int) -> TruncatedSeries:
    """First n diagonal coefficients of A/B by full expansion mod (x^n, y^n)."""
    _check_origin(b)
    b00 = b.coeff(0, 0)
    bterms = [(i, j, v) for i, j, v in b.terms() if (i, j) != (0, 0) and i < n and j < n]
    f = [[mpq(0)] * n for _ in range(n)]
    inv = 1 / b00
    for i in range(n):
        for j in range(n):
            acc = a.coeff(i, j)
            for k, l, v in bterms:
                if k <= i and l <= j:
                    acc -= v * f[i - k][j - l]
            f[i][j] = acc * inv
    return TruncatedSeries([f[k][k] for k in range(n)], n)


def annihilation_check(phi: BiPoly, series: TruncatedSeries, n: int) -> bool:
    """Whether phi(t, series) = 0 mod t^n."""
    if series.order < n:
        raise ValueError(f"series known only mod t^{series.order}, need t^{n}")
    if not phi:
        return True
    s = list(series.coeffs[:n])
    zero = mpq(0)
    coeffs = phi.y_coeffs()

    def as_list(u: UniPoly):
        out = list(u.coeffs[:n])
        return out + [zero] * (n - len(out))

    acc = as_list(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = mul_trunc(acc, s, n, zero)
        acc = [x + y for x, y in zip(acc, as_list(c))]
    return not any(acc)
