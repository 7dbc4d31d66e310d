"""Exact fields and sparse multivariate polynomials."""

from .fields import QQ, FieldSpec, is_prime, random_prime
from .parsing import PolynomialSyntaxError, format_polynomial, parse_polynomial
from .polynomial import (
    Monomial,
    Polynomial,
    PolynomialRing,
    RingMismatchError,
    differentiate,
    poly_mul,
)
from .transforms import (
    LinearChange,
    SingularMatrixError,
    apply_linear_change,
    leading_form,
    random_polynomial,
)

__all__ = [
    "QQ",
    "FieldSpec",
    "LinearChange",
    "Monomial",
    "Polynomial",
    "PolynomialRing",
    "PolynomialSyntaxError",
    "RingMismatchError",
    "SingularMatrixError",
    "apply_linear_change",
    "differentiate",
    "format_polynomial",
    "is_prime",
    "leading_form",
    "parse_polynomial",
    "poly_mul",
    "random_polynomial",
    "random_prime",
]
