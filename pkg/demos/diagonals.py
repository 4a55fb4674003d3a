"""
Diagonals of rational functions
===============================

The diagonal of F = sum f_{i,j} x^i y^j is sum f_{n,n} t^n.  For rational F
it is algebraic, and ``algebraic_diagonal`` returns a polynomial Phi(t, D)
that it cancels.  We check the answer against the series computed by brute
force.
"""

import time

from algdiag import algebraic_diagonal, annihilation_check, diagonal_series, format_bipoly
from algdiag.diagonal import sloped_diagonal
from algdiag.parser import parse_ratfun

# central binomial coefficients
a, b = parse_ratfun("1/(1-x-y)")
phi = algebraic_diagonal(a, b).phi
print(format_bipoly(phi, ("t", "D")))
print("first terms:", [int(v) for v in diagonal_series(a, b, 8)])

# a numerator of positive diagonal degree adds a pole at the origin
a, b = parse_ratfun("x/(1-x-y)")
res = algebraic_diagonal(a, b)
print("alpha =", res.alpha, " residue at 0 =", res.origin_residue)
print(format_bipoly(res.phi, ("t", "D")))

# degrees grow quickly with the number of small branches
for d in (1, 2, 3):
    a, b = parse_ratfun(f"x^{d - 1}/(1 - x^{d} - y^{d + 1})")
    t0 = time.perf_counter()
    res = algebraic_diagonal(a, b)
    ok = annihilation_check(res.phi, diagonal_series(a, b, 40), 40)
    print(f"d={d}: bidegree ({res.phi.deg_x}, {res.phi.deg_y}), "
          f"{res.c_small} small branches, check={ok}, {time.perf_counter() - t0:.1f}s")

# the (1, 2) diagonal of 1/(1-x-y) is sum C(3n, n) s^n
a, b = parse_ratfun("1/(1-x-y)")
print(format_bipoly(sloped_diagonal(a, b, 1, 2).phi, ("s", "D")))
