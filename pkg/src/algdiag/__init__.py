"""Exact algorithms for residues, composed sums and diagonals of rational functions.

Everything works over the rationals with exact arithmetic.  The main
entry points are :func:`algebraic_residues`, :func:`composed_sum_xy`,
:func:`algebraic_diagonal` and the walk-counting series in :mod:`algdiag.walks`.
"""

from .composed_sum import ComposedSumResult, composed_sum_xy, pure_composed_sum
from .diagonal import (
    DiagDegrees,
    DiagonalAnnihilator,
    algebraic_diagonal,
    annihilation_check,
    diag_degrees,
    diagonal_series,
    residue_at_origin,
    sloped_diagonal,
    small_branch_count,
    to_residue_form,
)
from .fields import QQ, RatFun, RationalFunctionField
from .gcd import SquareFreeDecomposition, bi_gcd, squarefree_decomposition, uni_gcd
from .parser import ParseError, parse_ratfun
from .polynomials import (
    MINUS_INFINITY,
    BiPoly,
    TriPoly,
    UniPoly,
    canonical,
    format_bipoly,
    reciprocal,
    shift_y,
)
from .residues import ResidueAnnihilator, algebraic_residues, residue_series_quotient
from .resultants import resultant_y, uni_resultant
from .series import (
    NewtonSeries,
    TruncatedSeries,
    hadamard,
    newton_series,
    poly_from_newton,
    series_exp,
    series_integrate,
    series_inverse,
    series_log,
)
from .walks import (
    StepSet,
    WalkTable,
    bridges_series,
    excursions_series,
    meanders_series,
    negative_altitude_series,
    walk_counts,
)

__version__ = "0.1.0"
