"""
A generic quadratic map of the plane
====================================

The map F = (x^2 + y, x + y^2) has the generic topological type for
bidegree (2, 2): three cusps and no nodes. We count both over the rationals
and certify the result.
"""

from stablemaps.certify import CertifyConfig, certify
from stablemaps.algebra import FieldSpec
from stablemaps.singularity import (
    MappingPair,
    build_jacobian_triple,
    count_cusps,
    count_nodes,
    formulas,
    infinity_checks,
)

F = MappingPair.parse("x^2+y", "x+y^2", 2, 2)
J, J11, J12 = build_jacobian_triple(F)
print("J   =", J)
print("J11 =", J11)
print("J12 =", J12)

bounds = formulas(2, 2)
print(f"maxima for (2,2): {bounds.c_max} cusps, {bounds.n_max} nodes")

###############################################################################
# The critical curve is a hyperbola with no singular points, and f and g
# share no point at infinity, so the counts are bounded by the maxima.
print(infinity_checks(F).as_dict())

cusps = count_cusps(F)
nodes = count_nodes(F)
print(f"cusps: {cusps.distinct} distinct, total multiplicity {cusps.total_multiplicity}")
print(f"nodes: {nodes.distinct} distinct, ordered-pair multiplicity {nodes.ordered_pair_multiplicity}")

###############################################################################
# Certification over Q is exact. Over F_p it is a screen that needs two
# primes agreeing on the maxima.
for cfg in (CertifyConfig(FieldSpec.rationals()), CertifyConfig(seed=1)):
    cert = certify(F, cfg)
    mode = "exact" if cert.exact_mode else "modular"
    print(f"{mode}: {cert.verdict} with ({cert.c_found}, {cert.n_found})")
