"""
Lattice walks
=============

Walks with steps (1, u) for u in a finite set S.  Bridges end at altitude
0, excursions also never go below 0, meanders only never go below 0.  The
series come from exp-integral identities and agree with direct counting.
"""

from algdiag import StepSet, bridges_series, excursions_series, meanders_series, walk_counts

motzkin = StepSet([-1, 0, 1])
print("bridges   ", [int(v) for v in bridges_series(motzkin, 10)])
print("excursions", [int(v) for v in excursions_series(motzkin, 10)])
print("meanders  ", [int(v) for v in meanders_series(motzkin, 10)])

# the same numbers straight from the recurrence
table = walk_counts(motzkin, 9, confined=True)
print("counted   ", [table.count(n, 0) for n in range(10)])

# a step set with long jumps
s = StepSet([-3, 1, 3])
print("{-3,1,3} excursions:", [int(v) for v in excursions_series(s, 16)])
