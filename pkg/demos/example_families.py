"""
Two families of generic maps
============================

For d2 = 1 the maps (x^d + x y^(d-1) + x^2 y^(d-2) + x^(d-1) + x, y) reach
the maximal numbers of cusps and nodes, and so do the same first
components paired with x^2 + y^2 + y for d2 = 2. This script checks the
smaller members over a large prime field.
"""

import time

from stablemaps.algebra import FieldSpec
from stablemaps.singularity import MappingPair, count_cusps, count_nodes, formulas

field = FieldSpec.fp(2147483647)


def first_component(d):
    return f"x^{d}+x*y^{d-1}+x^2*y^{d-2}+x^{d-1}+x"


print(" d1 d2 | cusps  max | nodes  max | seconds")
for d1, d2, g in [(3, 1, "y"), (4, 1, "y"), (5, 1, "y"), (6, 1, "y"),
                  (3, 2, "x^2+y^2+y"), (4, 2, "x^2+y^2+y")]:
    F = MappingPair.parse(first_component(d1), g, d1, d2, field)
    t0 = time.perf_counter()
    c, n = count_cusps(F), count_nodes(F)
    b = formulas(d1, d2)
    print(f" {d1:2d} {d2:2d} | {c.distinct:5d} {b.c_max:4d} | {n.distinct:5d} {b.n_max:4d} |"
          f" {time.perf_counter() - t0:7.2f}")
