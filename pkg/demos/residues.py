"""
Polynomials canceling residues
==============================

For a rational function P/Q in y with coefficients in Q(x), we compute a
polynomial R(x, z) whose roots are the residues of P/Q.  Multiple poles are
handled without factoring Q.
"""

from algdiag import algebraic_residues, format_bipoly
from algdiag.parser import parse_poly, parse_ratfun

# simple poles at y = +sqrt(x) and -sqrt(x): residues are +-1/(2 sqrt(x))
a, b = parse_ratfun("1/(y^2 - x)")
print(format_bipoly(algebraic_residues(a, b).poly, ("x", "z")))

# a family with a pole of order d+1 at each root of y - y^2 - x
for d in range(4):
    p = parse_poly(f"y^{d}")
    q = parse_poly(f"(y - y^2 - x)^{d + 1}")
    res = algebraic_residues(p, q, q)
    print(f"d={d}:", format_bipoly(res.poly, ("x", "z")))

# only the poles of a chosen factor: here y = 1
a, b = parse_ratfun("1/((y-1)*(y-x))")
print("at y=1 only:", format_bipoly(algebraic_residues(a, b, parse_poly("y-1")).poly, ("x", "z")))
