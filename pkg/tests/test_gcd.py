import random

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from algdiag.gcd import bi_gcd, content_y, squarefree_decomposition, uni_gcd
from algdiag.polynomials import BiPoly, UniPoly, canonical
from oracles import X, Y, from_sympy, rand_bipoly, to_sympy


def test_examples():
    d = squarefree_decomposition(from_sympy((Y - 1) ** 2 * (Y + 2)))
    assert [(canonical(f), i) for f, i in d.factors] == [(from_sympy(Y + 2), 1), (from_sympy(Y - 1), 2)]
    d = squarefree_decomposition(BiPoly.y() ** 2)
    assert d.factors == ((BiPoly.y(), 2),)


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_pole_family_has_one_factor(d):
    q = from_sympy((Y - Y**2 - X) ** (d + 1))
    dec = squarefree_decomposition(q)
    assert dec.m == 1
    f, i = dec.factors[0]
    assert i == d + 1
    assert canonical(f) == canonical(from_sympy(Y - Y**2 - X))


def test_zero_input():
    with pytest.raises(ValueError, match="zero polynomial has no square-free decomposition"):
        squarefree_decomposition(BiPoly())


def test_content_is_split_off():
    q = from_sympy(3 * (X + 1) * (Y**2 - X) ** 2)
    dec = squarefree_decomposition(q)
    assert dec.expand() == q
    assert dec.content.degree == 1
    assert content_y(q) == UniPoly([1, 1])


def test_wrt_x():
    q = from_sympy((X - Y) ** 2 * (X + 1) * (Y + 3))
    dec = squarefree_decomposition(q, wrt="x")
    assert dec.expand() == q
    assert {i for _, i in dec.factors} == {1, 2}


def _check_decomposition(q):
    dec = squarefree_decomposition(q)
    assert dec.expand() == q
    fs = [f for f, _ in dec.factors]
    for f in fs:
        assert f.deg_y > 0
        assert bi_gcd(f, f.diff_y()).deg_y == 0
    for a in range(len(fs)):
        for b in range(a + 1, len(fs)):
            assert bi_gcd(fs[a], fs[b]).deg_y == 0
    # the multiplicity structure agrees with sympy's
    sym = sp.sqf_list(sp.Poly(to_sympy(q), Y, domain=sp.QQ[X]))
    want = sorted((int(sp.Poly(f.as_expr(), Y).degree()), i) for f, i in sym[1] if sp.Poly(f.as_expr(), Y).degree() > 0)
    got = sorted((f.deg_y, i) for f, i in dec.factors)
    assert got == want


def test_random_products_reconstruct():
    rng = random.Random(2024)
    for _ in range(100):
        q = BiPoly.constant(rng.choice([1, -2, 3]))
        for _ in range(rng.randint(1, 3)):
            f = rand_bipoly(rng, 1, rng.randint(0, 2), density=0.8)
            if not f:
                continue
            q = q * f ** rng.randint(1, 3)
        _check_decomposition(q)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_repeated_linear_factors(a, b, m1, m2):
    q = from_sympy((Y - a * X) ** m1 * (Y - b - X**2) ** m2)
    _check_decomposition(q)


def test_uni_gcd_monic():
    a = UniPoly([-1, 0, 1]) * 6
    b = UniPoly([1, 1]) * 4
    assert uni_gcd(a, b) == UniPoly([1, 1])
    assert uni_gcd(UniPoly(), UniPoly()) == UniPoly()


def test_bi_gcd_matches_sympy():
    rng = random.Random(5)
    for _ in range(20):
        g = rand_bipoly(rng, 1, 2)
        a, b = rand_bipoly(rng, 2, 1) * g, rand_bipoly(rng, 1, 2) * g
        if not a or not b:
            continue
        want = from_sympy(sp.gcd(to_sympy(a), to_sympy(b)))
        assert bi_gcd(a, b) == canonical(want)
