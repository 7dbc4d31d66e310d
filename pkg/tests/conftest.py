import random

import pytest

from stablemaps.algebra import FieldSpec, Polynomial, PolynomialRing
from stablemaps.singularity import MappingPair

# 2^31 - 1, a Mersenne prime inside the default sampling window
P31 = 2147483647
GF = FieldSpec.fp(P31)
QQ = FieldSpec.rationals()


def example1(d1, field=GF):
    return MappingPair.parse(f"x^{d1}+x*y^{d1-1}+x^2*y^{d1-2}+x^{d1-1}+x", "y", d1, 1, field)


def example2(d1, field=GF):
    return MappingPair.parse(f"x^{d1}+x*y^{d1-1}+x^2*y^{d1-2}+x^{d1-1}+x", "x^2+y^2+y", d1, 2, field)


def example4(d1, field=GF):
    f = f"x^{d1}+2*x^{d1-1}*y+x*y^{d1-1}+x^2*y^{d1-2}+x^{d1-1}+x"
    return MappingPair.parse(f, "x^4+2*y^4+y", d1, 4, field)


def quadratic(field=QQ):
    return MappingPair.parse("x^2+y", "x+y^2", 2, 2, field)


def sparse_polynomial(ring, d, rng, density=0.5, coeffs=(-2, -1, 1, 2)):
    """Random polynomial of degree <= d with many zero coefficients."""
    terms = {}
    for total in range(d + 1):
        for i in range(total + 1):
            if rng.random() < density:
                terms[(i, total - i)] = ring.field(rng.choice(coeffs))
    return Polynomial(ring, terms)


@pytest.fixture
def gf():
    return GF


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def xy_gf():
    return PolynomialRing(("x", "y"), GF)


@pytest.fixture
def xy_qq():
    return PolynomialRing(("x", "y"), QQ)
