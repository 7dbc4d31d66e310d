"""
Groebner bases and elimination
==============================

A small tour of the exact algebra underneath the counts: a reduced basis,
an elimination ideal, and the resultant as a second route to the same
projection.
"""

from stablemaps.algebra import PolynomialRing
from stablemaps.groebner import (
    MonomialOrder,
    buchberger,
    eliminant,
    elimination_ideal,
    quotient_dimension,
    resultant,
    squarefree_part,
    standard_monomials,
)

R = PolynomialRing(("x", "y"))
x, y = R.gens

# A circle meets a hyperbola in four points.
gens = [x**2 + y**2 - 5, x * y - 2]
G = buchberger(gens, MonomialOrder.lex(("y", "x")))
print("lex basis (y > x):")
for g in G:
    print("   ", g)

# The quotient has dimension four: one standard monomial per point.
G = buchberger(gens)
print("standard monomials:", standard_monomials(G))
print("quotient dimension:", quotient_dimension(G))

###############################################################################
# Projecting onto x. The eliminant generates the ideal intersected with k[x],
# and the resultant in y lands in that same ideal.
h = eliminant(gens, "x", G)
r = resultant(*gens, "y")
print("eliminant:      ", h)
print("Res_y:          ", r)
print("squarefree part:", squarefree_part(h))

###############################################################################
# Eliminating a parameter recovers the implicit equation of a parabola.
S = PolynomialRing(("t", "x", "y"))
t, X, Y = S.gens
print("parabola:", elimination_ideal([X - t, Y - t**2], ["x", "y"]))
