"""Independent reference computations and random generators for the tests.

The oracles go through sympy or through plain brute force, never through
the package's own algorithms.
"""

import itertools
import random
from fractions import Fraction

import sympy as sp

from algdiag.polynomials import BiPoly, UniPoly

X, Y, Z, T = sp.symbols("x y z t")


def to_sympy(p: BiPoly, names=(X, Y)):
    a, b = names
    return sp.Add(*[sp.Rational(int(v.numerator), int(v.denominator)) * a**i * b**j for i, j, v in p.terms()])


def from_sympy(expr, names=(X, Y)) -> BiPoly:
    poly = sp.Poly(sp.expand(expr), *names)
    return BiPoly.from_dict({(int(i), int(j)): Fraction(int(c.p), int(c.q)) for (i, j), c in poly.terms()})


def uni_to_sympy(p: UniPoly, var=X):
    return sp.Add(*[sp.Rational(int(v.numerator), int(v.denominator)) * var**k for k, v in enumerate(p.coeffs)])


def rand_bipoly(rng: random.Random, dx: int, dy: int, lo=-5, hi=5, density=0.7) -> BiPoly:
    terms = {}
    for i in range(dx + 1):
        for j in range(dy + 1):
            if rng.random() < density:
                terms[(i, j)] = rng.randint(lo, hi)
    return BiPoly.from_dict(terms)


def rand_unipoly(rng: random.Random, d: int, lo=-9, hi=9) -> UniPoly:
    c = [rng.randint(lo, hi) for _ in range(d)] + [rng.choice([v for v in range(lo, hi + 1) if v])]
    return UniPoly(c)


def brute_composed_sum(roots, c):
    """prod over c-subsets of (y - sum of the subset), roots given as sympy expressions in x."""
    acc = sp.Integer(1)
    for sub in itertools.combinations(roots, c):
        acc *= Y - sp.Add(*sub)
    return sp.expand(acc)


def walk_table(steps, n, confined):
    """Dense dynamic programming over altitudes, rows 0..n."""
    rows = [{0: 1}]
    for _ in range(n):
        nxt = {}
        for k, v in rows[-1].items():
            for u in steps:
                if confined and k + u < 0:
                    continue
                nxt[k + u] = nxt.get(k + u, 0) + v
        rows.append(nxt)
    return rows


def enumerate_walks(steps, n):
    """All step sequences of length n, for tiny n."""
    return list(itertools.product(steps, repeat=n))
