"""
Sums of roots
=============

``pure_composed_sum`` builds the polynomial whose roots are all sums of c
roots of P.  ``composed_sum_xy`` does the same when the coefficients are
polynomials in x, clearing denominators by a power of the leading
coefficient.
"""

from algdiag import UniPoly, composed_sum_xy, format_bipoly, pure_composed_sum
from algdiag.parser import parse_poly
from algdiag.polynomials import format_unipoly

# roots 1, 2, 3: the pair sums are 3, 4, 5
print(format_unipoly(pure_composed_sum(UniPoly([-6, 11, -6, 1]), 2), "y"))

# roots are algebraic functions of x
p = parse_poly("(2+x)*y^3 + 3*x*y + x^2")
for c in (1, 2, 3):
    res = composed_sum_xy(p, c)
    print(f"c={c}: deg_y={res.poly.deg_y} (C(3,{c})={res.D_y}), deg_x={res.poly.deg_x} <= {p.deg_x * res.D_x}")
    print("   ", format_bipoly(res.poly))
