"""
Three-cycles appear at c = -7/4
===============================

Walk through the closed form: the branch triples, their cubics, the
solved cycles, and an independent check by root isolation on f^3(x) - x.
"""

from quadcycles import cycle_cubic, cycles_for, symmetric_triple, Branch
from quadcycles.oracle import compose_f3_minus_x, isolate_real_roots

# Just above the threshold nothing exists.
print("c = -1.7499:", cycles_for(-1.7499))

# At the threshold both branches give the same triple (s1, s2, s3).
for br in Branch:
    print(br.value, symmetric_triple(-1.75, br).as_tuple(), cycle_cubic(-1.75, br).coefficients())

(cycle,) = cycles_for(-1.75)
print("the single cycle:", cycle.components)

# The same points show up as double roots of f^3(x) - x, next to the two fixed points.
print("roots of f^3(x) - x:", isolate_real_roots(compose_f3_minus_x(-1.75), -3, 3))

# Below the threshold the branches split into two distinct cycles.
for cyc in cycles_for(-2.0):
    print(cyc.branch.value, cyc.components)
