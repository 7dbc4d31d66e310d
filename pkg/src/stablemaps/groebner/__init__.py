"""Groebner bases, elimination, quotient dimensions and univariate tools."""

from .basis import (
    INFINITE,
    GroebnerBasis,
    Ideal,
    buchberger,
    eliminant,
    elimination_ideal,
    is_zero_dimensional,
    minimal_polynomial,
    multiplication_matrix,
    normal_form,
    quotient_dimension,
    standard_monomials,
)
from .orders import MonomialOrder
from .resultant import binary_form_resultant, resultant
from .univariate import CharacteristicTooSmallError, squarefree_part, univariate_gcd

__all__ = [
    "INFINITE",
    "CharacteristicTooSmallError",
    "GroebnerBasis",
    "Ideal",
    "MonomialOrder",
    "binary_form_resultant",
    "buchberger",
    "eliminant",
    "elimination_ideal",
    "is_zero_dimensional",
    "minimal_polynomial",
    "multiplication_matrix",
    "normal_form",
    "quotient_dimension",
    "resultant",
    "squarefree_part",
    "standard_monomials",
    "univariate_gcd",
]
