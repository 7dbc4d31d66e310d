"""
Separating cusps with a change of coordinates
=============================================

Counting distinct roots of the eliminant in x undercounts cusps that share
an x-coordinate. A random linear change of coordinates separates them while
the total multiplicity, a geometric invariant, stays put.
"""

import random

from stablemaps.algebra import FieldSpec, LinearChange
from stablemaps.singularity import MappingPair, count_cusps, cusp_census

# (3y^5 - 10y^3 + 15y + 15xy, x) has cusps at (-1, 0), (0, 1) and (0, -1).
F = MappingPair.parse("3*y^5-10*y^3+15*y+15*x*y", "x", 5, 1, FieldSpec.fp(2147483647))

plain = count_cusps(F)
print(f"identity: {plain.distinct} distinct x-values, total {plain.total_multiplicity}")

rng = random.Random(0)
for _ in range(3):
    L = LinearChange.random(rng, 100)
    data = count_cusps(F, L)
    rows = [[int(v) for v in row] for row in L.matrix]
    print(f"L = {rows}: distinct {data.distinct}, total {data.total_multiplicity}")

###############################################################################
# The census does the same bookkeeping and stops once every cusp is separated.
census = cusp_census(F, retries=5, seed=1)
print(f"census: {census.distinct} cusps after {len(census.attempts)} attempts")
