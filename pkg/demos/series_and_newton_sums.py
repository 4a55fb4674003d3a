"""
Truncated power series and Newton sums
======================================

Series are stored with their precision.  Newton sums turn a polynomial into
the generating series of the power sums of its roots, and back.
"""

from gmpy2 import mpq

from algdiag.polynomials import format_unipoly
from algdiag import TruncatedSeries, UniPoly, newton_series, poly_from_newton, series_exp, series_log

# exp and log undo each other modulo x^8
f = TruncatedSeries([1, 1, 5, 0, 0, 0, 0, 0])
print("log(1 + x + 5x^2) =", [str(v) for v in series_log(f)])
print("exp(log(...))     =", [str(v) for v in series_exp(series_log(f))])

# roots 1 and 2 have power sums 1^k + 2^k
p = UniPoly([2, -3, 1])
n = newton_series(p, 6)
print("power sums of y^2 - 3y + 2:", [int(v) for v in n.inner])

# the first deg P + 1 sums determine the monic polynomial
print("rebuilt:", format_unipoly(poly_from_newton(n, 2), "y"))

# works for rational roots too
q = UniPoly([mpq(-1, 6), mpq(-1, 6), 1])  # roots 1/2 and -1/3
print("power sums:", [str(v) for v in newton_series(q, 5).inner])
