"""Polynomials canceling the residues of a bivariate rational function.

For P/Q in Q(x)(y) and a divisor Qhat of Q, the residues at the roots of
Qhat are algebraic over Q(x).  With Qhat = Q_1 Q_2^2 ... Q_m^m square-free,
the residue at a root a of Q_i is S_{i-1}(a), where S_{i-1} is the
coefficient of t^(i-1) in

    P(y+t) / (U_i(y+t) V_i(y,t)^i),   U_i = Q / Q_i^i,
    V_i = (Q_i(y+t) - Q_i(y)) / t.

Writing S_{i-1} = A_i / B_i, the residues are roots of Res_y(A_i - z B_i, Q_i).
For simple poles this is the Rothstein-Trager resultant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gcd import bi_gcd, squarefree_decomposition
from .interpolation import SamplingReport, interpolate, sample_and_interpolate
from .polynomials import MINUS_INFINITY, BiPoly, TriPoly, canonical, integer_primitive_scale, shift_y
from .resultants import uni_resultant

__all__ = [
    "ResidueAnnihilator",
    "algebraic_residues",
    "residue_series_quotient",
    "residue_resultant",
    "rothstein_trager",
]


@dataclass(frozen=True)
class ResidueAnnihilator:
    """Canonical R(x, z) with one report ``(i, deg_y Q_i, deg_x R_i)`` per multiplicity."""

    poly: BiPoly
    z_degree: int
    factor_reports: tuple
    x_bound: int = 0
    skipped_points: tuple = ()

    @property
    def x_degree(self):
        return self.poly.deg_x


# -- t-series with bivariate coefficients -----------------------------------------


def _slices(p: TriPoly, n: int) -> list:
    return [p.t_slice(k) for k in range(n)]


def _slice_mul(a: list, b: list, n: int) -> list:
    out = [BiPoly()] * n
    for i, u in enumerate(a[:n]):
        if not u:
            continue
        for j, v in enumerate(b[: n - i]):
            if v:
                out[i + j] = out[i + j] + u * v
    return out


def _normalize_pair(a: BiPoly, b: BiPoly):
    """Scale so that b is integer-primitive with a positive first coefficient."""
    terms = list(b.terms())
    s = integer_primitive_scale([v for _, _, v in terms])
    if terms[0][2] < 0:
        s = -s
    return a * s, b * s


def residue_series_quotient(pshift: TriPoly, dshift: TriPoly, i: int):
    """Coefficient of t^(i-1) in pshift/dshift, as a coprime pair (A, B).

    Numerators are carried over a fixed power of the constant term D_0 of
    the denominator: S_k = N_k / D_0^(k+1) with
    N_k = P_k D_0^k - sum_{j=1..k} D_j N_{k-j} D_0^(j-1).
    A single gcd at the end makes the pair coprime.
    """
    if i < 1:
        raise ValueError("multiplicity must be positive")
    pk = _slices(pshift, i)
    dk = _slices(dshift, i)
    d0 = dk[0]
    if not d0:
        raise ZeroDivisionError("denominator vanishes at t = 0")
    powers = [BiPoly.constant(1)]
    for _ in range(i):
        powers.append(powers[-1] * d0)
    nums = []
    for k in range(i):
        acc = pk[k] * powers[k]
        for j in range(1, k + 1):
            if dk[j]:
                acc = acc - dk[j] * nums[k - j] * powers[j - 1]
        nums.append(acc)
    a, b = nums[i - 1], powers[i]
    if not a:
        return BiPoly(), BiPoly.constant(1)
    g = bi_gcd(a, b)
    if g.deg_x > 0 or g.deg_y > 0:
        a, b = a.exact_div(g), b.exact_div(g)
    return _normalize_pair(a, b)


# -- Res_y(A - z B, Q) by evaluation-interpolation in x and z -------------------------


def residue_resultant(a: BiPoly, b: BiPoly, q: BiPoly, report: SamplingReport | None = None) -> BiPoly:
    """Res_y(A - z B, Q) as a polynomial in (x, z).

    At each integer x0 the resultant is a polynomial of degree deg_y Q in z,
    recovered from the values at z = 0..deg_y Q.  An x0 is skipped when the
    leading coefficient of Q vanishes there, or when the y-degree of A - z B
    drops identically in z.
    """
    m = q.deg_y
    if m < 1:
        raise ValueError("Q must have positive degree in y")
    n = max(a.deg_y, b.deg_y)
    if n == MINUS_INFINITY:
        raise ValueError("A and B are both zero")
    dxab = max(a.deg_x, b.deg_x)
    bound = dxab * m + q.deg_x * n
    lq = q.lc_y()
    la = a.y_coeffs()[n] if a.deg_y == n else None
    lb = b.y_coeffs()[n] if b.deg_y == n else None

    def bad(x0):
        if not lq(x0):
            return True
        return not ((la is not None and la(x0)) or (lb is not None and lb(x0)))

    zs = list(range(m + 1))

    def value(x0):
        ax, bx, qx = a.eval_x(x0), b.eval_x(x0), q.eval_x(x0)
        vals = [uni_resultant(ax - bx * z0, qx, deg_f=n) for z0 in zs]
        r = interpolate(zs, vals)
        return [r[k] for k in range(m + 1)]

    polys = sample_and_interpolate(value, bound, is_bad=bad, report=report)
    # polys[k] is the coefficient of z^k as a polynomial in x
    return BiPoly.from_y_coeffs(polys)


# -- Algorithm --------------------------------------------------------------------


def _v_slices(qi: BiPoly, n: int) -> list:
    """First n t-slices of (Q_i(y+t) - Q_i(y)) / t."""
    sh = shift_y(qi)
    return [sh.t_slice(k + 1) for k in range(n)]


def algebraic_residues(p: BiPoly, q: BiPoly, qhat: BiPoly | None = None) -> ResidueAnnihilator:
    """Canonical polynomial in (x, z) canceling the residues of p/q at the roots of qhat."""
    if not q or q.deg_y < 1:
        raise ValueError("denominator must have positive degree in y")
    qhat = q if qhat is None else qhat
    if not qhat:
        raise ValueError("Qhat is zero")
    if p:
        g = bi_gcd(p, q)
        if g.deg_y > 0:
            raise ValueError("P and Q are not coprime wrt y")
    try:
        cofactor = q.exact_div(qhat)
    except ArithmeticError:
        raise ValueError("Qhat does not divide Q") from None
    if qhat.deg_y > 0 and cofactor.deg_y > 0 and bi_gcd(qhat, cofactor).deg_y > 0:
        raise ValueError("Qhat is not coprime to Q/Qhat")

    dx = max(p.deg_x, q.deg_x) if p else q.deg_x
    dy = max(p.deg_y, q.deg_y) if p else q.deg_y
    qstar = squarefree_decomposition(q).squarefree_part()
    dxs, dys = qstar.deg_x, qstar.deg_y
    x_bound = 2 * dxs * (dy + 1) + 2 * (dys - 1) * dx - 2 * dxs * dys

    dec = squarefree_decomposition(qhat)
    result = BiPoly.constant(1)
    reports = []
    skipped = []
    if not p:
        # every residue is zero
        return ResidueAnnihilator(
            BiPoly.y(), 1 if dec.factors else 0, tuple((i, f.deg_y, 0) for f, i in dec.factors), x_bound
        )
    pshift = shift_y(p)
    for qi, i in dec.factors:
        ui = q.exact_div(qi**i)
        den = _slice_mul(_slices(shift_y(ui), i), _power_slices(_v_slices(qi, i), i, i), i)
        a, b = residue_series_quotient(pshift, TriPoly.from_t_slices(den), i)
        rep = SamplingReport()
        if not a:
            # the residue is zero at all roots of Q_i
            ri = BiPoly.y()
        else:
            ri = residue_resultant(a, b, qi, rep)
        skipped.extend(rep.skipped)
        reports.append((i, qi.deg_y, ri.deg_x))
        result = result * ri
    poly = canonical(result)
    return ResidueAnnihilator(poly, poly.deg_y, tuple(reports), x_bound, tuple(sorted(set(skipped))))


def _power_slices(s: list, e: int, n: int) -> list:
    out = [BiPoly.constant(1)] + [BiPoly()] * (n - 1)
    for _ in range(e):
        out = _slice_mul(out, s, n)
    return out


def rothstein_trager(p: BiPoly, q: BiPoly) -> BiPoly:
    """Res_y(P - z Q_y, Q) in canonical form, for square-free Q."""
    return canonical(residue_resultant(p, q.diff_y(), q))
