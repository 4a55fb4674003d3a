import random
from math import comb

import pytest
import sympy as sp
from gmpy2 import mpq

from algdiag.diagonal import (
    algebraic_diagonal,
    annihilation_check,
    diag_degrees,
    diagonal_series,
    residue_at_origin,
    sloped_diagonal,
    small_branch_count,
    to_residue_form,
)
from algdiag.fields import RatFun
from algdiag.polynomials import MINUS_INFINITY, BiPoly, UniPoly, canonical
from algdiag.series import TruncatedSeries
from oracles import X, Y, from_sympy, rand_bipoly, to_sympy

T, D = sp.symbols("t D")


def F(expr):
    n, d = sp.fraction(sp.together(expr))
    return from_sympy(n), from_sympy(d)


def _td(expr):
    return from_sympy(expr, (T, D))


def _ty(expr):
    return from_sympy(expr, (T, Y))


def _coeffs_of(expr, n):
    """Diagonal coefficients by sympy double series, an oracle independent of the package."""
    ser = sp.series(sp.series(expr, X, 0, n).removeO(), Y, 0, n).removeO()
    poly = sp.Poly(ser, X, Y)
    return [mpq(str(poly.coeff_monomial(X**k * Y**k))) for k in range(n)]


# -- degrees and substitution --------------------------------------------------------


def test_diag_degrees_examples():
    dd = diag_degrees(from_sympy(1 - X - Y))
    assert (dd.ddeg_minus, dd.ddeg_plus) == (1, 1)
    dd = diag_degrees(from_sympy(X**3))
    assert (dd.ddeg_minus, dd.ddeg_plus) == (3, -3)
    dd = diag_degrees(BiPoly())
    assert dd.ddeg_minus == dd.ddeg_plus == MINUS_INFINITY


def test_diag_degrees_additive():
    rng = random.Random(61)
    for _ in range(30):
        p, q = rand_bipoly(rng, 3, 3), rand_bipoly(rng, 3, 3)
        if not p or not q:
            continue
        a, b, ab = diag_degrees(p), diag_degrees(q), diag_degrees(p * q)
        assert ab.ddeg_minus == a.ddeg_minus + b.ddeg_minus
        assert ab.ddeg_plus == a.ddeg_plus + b.ddeg_plus
        assert a.ddeg_minus <= p.deg_x and a.ddeg_plus <= p.deg_y


def test_to_residue_form_examples():
    assert to_residue_form(*F(1 / (1 - X - Y))) == (_ty(sp.Integer(1)), _ty(Y - T - Y**2), 0)
    for d in (1, 2, 3):
        p, q, alpha = to_residue_form(*F(X ** (d - 1) / (1 - X**d - Y ** (d + 1))))
        assert (p, q, alpha) == (_ty(T ** (d - 1)), _ty(Y**d - T**d - Y ** (2 * d + 1)), 0)
    assert to_residue_form(*F(X / (1 - X - Y))) == (_ty(T), _ty(Y - T - Y**2), -1)


def test_to_residue_form_identity_random():
    rng = random.Random(62)
    for _ in range(20):
        a, b = rand_bipoly(rng, 2, 3), rand_bipoly(rng, 2, 3)
        b = b + BiPoly.constant(1 - b.coeff(0, 0))
        if not a:
            continue
        p, q, alpha = to_residue_form(a, b)
        lhs = (to_sympy(a) / to_sympy(b)).subs(X, T / Y) / Y
        rhs = Y**alpha * to_sympy(p, (T, Y)) / to_sympy(q, (T, Y))
        assert sp.simplify(lhs - rhs) == 0
        assert q.eval_y(0)


def test_to_residue_form_errors():
    with pytest.raises(ValueError, match="denominator vanishes at origin"):
        to_residue_form(from_sympy(sp.Integer(1)), from_sympy(X + Y))


def test_small_branch_count_examples():
    assert small_branch_count(from_sympy(1 - X - Y)) == 1
    for d in (1, 2, 3, 4):
        assert small_branch_count(from_sympy(1 - X**d - Y ** (d + 1))) == d
    assert small_branch_count(from_sympy(sp.Integer(1))) == 0


def test_residue_at_origin_examples():
    p, q = _ty(T), _ty(Y - T - Y**2)
    assert residue_at_origin(p, q, -1) == RatFun(UniPoly([-1]))
    # t^2/(y - t - y^2): Laurent coefficient of y^1 over Q(t)
    r = residue_at_origin(_ty(T**2), q, -2)
    ser = sp.series(T**2 / (Y - T - Y**2), Y, 0, 2).removeO()
    want = sp.cancel(ser.coeff(Y, 1))
    assert sp.cancel(sp.Poly(list(reversed([int(c) for c in r.num.coeffs])), T).as_expr()
                     / sp.Poly(list(reversed([int(c) for c in r.den.coeffs])), T).as_expr() - want) == 0
    # alpha = -1: P(t, 0) / Q(t, 0)
    r = residue_at_origin(_ty(T + 3 * Y), _ty(2 - T + Y), -1)
    assert r == RatFun(UniPoly([0, 1]), UniPoly([2, -1]))


def test_residue_at_origin_errors():
    with pytest.raises(ValueError):
        residue_at_origin(_ty(T), _ty(Y - T), 0)
    with pytest.raises(ValueError):
        residue_at_origin(_ty(T), _ty(Y), -1)


# -- series oracle ---------------------------------------------------------------------


def test_diagonal_series_examples():
    assert list(diagonal_series(*F(1 / (1 - X - Y)), 5)) == [1, 2, 6, 20, 70]
    assert list(diagonal_series(*F(1 / ((1 - X) * (1 - Y))), 4)) == [1, 1, 1, 1]
    got = list(diagonal_series(*F(X / (1 - X - Y)), 4))
    assert got == [0, 1, 3, 10]
    assert got[1:] == [comb(2 * n - 1, n) for n in range(1, 4)]


def test_diagonal_series_against_sympy():
    expr = (1 + 2 * X * Y) / (1 - X - 3 * Y + X**2 * Y)
    assert list(diagonal_series(*F(expr), 7)) == _coeffs_of(expr, 7)


def test_diagonal_series_requires_origin():
    with pytest.raises(ValueError):
        diagonal_series(from_sympy(sp.Integer(1)), from_sympy(X - Y), 4)


def test_annihilation_check_examples():
    cat = TruncatedSeries([comb(2 * n, n) for n in range(40)])
    assert annihilation_check(_td((1 - 4 * T) * D**2 - 1), cat, 40)
    assert not annihilation_check(_td(D - 1), TruncatedSeries([1, 1]), 2)
    assert annihilation_check(_td(D), TruncatedSeries([0] * 10), 10)


# -- pipeline ------------------------------------------------------------------------------


def test_diagonal_central_binomial():
    res = algebraic_diagonal(*F(1 / (1 - X - Y)))
    assert res.phi == _td((1 - 4 * T) * D**2 - 1)
    assert res.c_small == 1


def test_diagonal_cube_matches_eq3():
    res = algebraic_diagonal(*F(1 / (1 - X - Y) ** 3))
    assert res.phi == canonical(_td((1 - 4 * T) ** 5 * D**2 - (1 + 2 * T) ** 2))


def test_zero_numerator():
    assert algebraic_diagonal(BiPoly(), from_sympy(1 - X - Y)).phi == _td(D)


def test_origin_vanishing_rejected():
    with pytest.raises(ValueError, match="origin"):
        algebraic_diagonal(from_sympy(sp.Integer(1)), from_sympy(X + Y))


def test_negative_alpha_shift():
    a, b = F(X / (1 - X - Y))
    res = algebraic_diagonal(a, b)
    assert res.alpha == -1
    assert res.origin_residue == RatFun(UniPoly([-1]))
    assert annihilation_check(res.phi, diagonal_series(a, b, 40), 40)


def test_no_small_branch():
    # 1/(1-x): only f_{n,0} nonzero, diagonal is 1
    a, b = F(1 / (1 - X))
    res = algebraic_diagonal(a, b)
    assert annihilation_check(res.phi, diagonal_series(a, b, 20), 20)
    # 1/(1-y)^2 has diagonal 1 as well
    a, b = F(1 / (1 - Y) ** 2)
    assert annihilation_check(algebraic_diagonal(a, b).phi, diagonal_series(a, b, 20), 20)


@pytest.mark.parametrize(
    "expr",
    [
        1 / (1 - X - Y - X * Y),
        (1 + X) / (1 - X * Y - Y**2 - X**2),
        1 / ((1 - X - Y) * (1 - 2 * X - Y)),
        X**2 * Y / (1 - X - Y) ** 2,
        1 / (1 - X - Y**2),
        (X - Y) / (1 - X * Y**2 - X**2 * Y),
    ],
)
def test_soundness_examples(expr):
    a, b = F(expr)
    res = algebraic_diagonal(a, b)
    assert annihilation_check(res.phi, diagonal_series(a, b, 40), 40)
    rep = res.degree_report
    assert rep.deg_delta <= rep.delta_bound and rep.deg_t <= rep.t_bound


def test_soundness_random():
    rng = random.Random(71)
    done = 0
    while done < 10:
        a = rand_bipoly(rng, rng.randint(0, 2), rng.randint(0, 2), density=0.6)
        b = rand_bipoly(rng, 2, rng.randint(1, 2), density=0.5)
        if not a or not b.coeff(0, 0):
            continue
        res = algebraic_diagonal(a, b)
        assert annihilation_check(res.phi, diagonal_series(a, b, 30), 30)
        done += 1


def test_example3_small_bidegrees():
    for d, want in [(1, (2, 3)), (2, (18, 10))]:
        res = algebraic_diagonal(*F(X ** (d - 1) / (1 - X**d - Y ** (d + 1))))
        assert (res.phi.deg_x, res.phi.deg_y) == want


# -- sloped diagonals ---------------------------------------------------------------------


def test_sloped_unit_slope_is_plain_diagonal():
    a, b = F(1 / (1 - X - Y))
    assert sloped_diagonal(a, b, 1, 1).phi == algebraic_diagonal(a, b).phi
    a, b = F((1 + X) / (1 - X * Y - Y**2 - X**2))
    assert sloped_diagonal(a, b, 1, 1).phi == algebraic_diagonal(a, b).phi


@pytest.mark.parametrize("p,q", [(1, 2), (2, 1), (2, 3)])
def test_sloped_binomials(p, q):
    # f_{i,j} = C(i+j, i), so the (p, q) diagonal is sum C((p+q)n, pn) s^n
    a, b = F(1 / (1 - X - Y))
    res = sloped_diagonal(a, b, p, q)
    ser = TruncatedSeries([comb((p + q) * n, p * n) for n in range(30)])
    assert annihilation_check(res.phi, ser, 30)


def test_sloped_rejects_non_coprime():
    a, b = F(1 / (1 - X - Y))
    with pytest.raises(ValueError, match="coprime"):
        sloped_diagonal(a, b, 2, 2)
    with pytest.raises(ValueError):
        sloped_diagonal(a, b, 0, 1)
