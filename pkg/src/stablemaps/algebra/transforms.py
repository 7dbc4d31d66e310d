"""Linear coordinate changes, leading forms and random polynomials."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Union

from .fields import FieldSpec
from .polynomial import Polynomial, PolynomialRing


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class LinearChange:
    """The substitution (x, y) -> L (x, y)^T, i.e. x -> a x + b y, y -> c x + d y."""

    matrix: tuple
    seed: Optional[object] = None

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        m = ((Fraction(a), Fraction(b)), (Fraction(c), Fraction(d)))
        object.__setattr__(self, "matrix", m)
        if self.det() == 0:
            raise SingularMatrixError(f"singular coordinate change {m}")

    def det(self) -> Fraction:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __matmul__(self, other: "LinearChange") -> "LinearChange":
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        return LinearChange(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    @property
    def is_identity(self) -> bool:
        return self.matrix == ((1, 0), (0, 1))

    @classmethod
    def identity(cls) -> "LinearChange":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def swap(cls) -> "LinearChange":
        return cls(((0, 1), (1, 0)))

    @classmethod
    def random(cls, rng: random.Random, bound: int = 1000, seed=None) -> "LinearChange":
        """Random integer matrix with entries in [-bound, bound] and nonzero determinant.

        Integer entries keep the change valid over Q and over every large prime
        not dividing the determinant.
        """
        while True:
            m = tuple(tuple(rng.randint(-bound, bound) for _ in range(2)) for _ in range(2))
            if m[0][0] * m[1][1] - m[0][1] * m[1][0]:
                return cls(m, seed)

    def as_dict(self) -> dict:
        return {"matrix": [[str(v) for v in row] for row in self.matrix], "seed": self.seed}


def apply_linear_change(p: Polynomial, L: LinearChange, variables=("x", "y")) -> Polynomial:
    """Return p(L (x, y)^T) for the two named variables of p's ring."""
    ring = p.ring
    field = ring.field
    if field.prime and field(L.det()) == 0:
        raise SingularMatrixError(f"coordinate change is singular mod {field.prime}")
    if L.is_identity:
        return p
    vx, vy = variables
    X, Y = ring.gen(vx), ring.gen(vy)
    (a, b), (c, d) = L.matrix
    images = {vx: X.scale(a) + Y.scale(b), vy: X.scale(c) + Y.scale(d)}
    return p.compose(images)


def leading_form(p: Polynomial, d: int) -> Polynomial:
    """Degree-``d`` homogeneous part of ``p`` (zero if p has no such terms)."""
    if p.total_degree() > d:
        raise ValueError(f"polynomial of degree {p.total_degree()} exceeds bound {d}")
    return Polynomial(p.ring, {m: c for m, c in p.terms.items() if sum(m) == d}, _clean=True)


def monomials_up_to(nvars: int, d: int):
    """All exponent tuples of total degree <= d, highest degree first."""
    out = [m for m in product(range(d + 1), repeat=nvars) if sum(m) <= d]
    out.sort(key=lambda m: (sum(m), m), reverse=True)
    return out


def random_polynomial(
    ring: PolynomialRing,
    d: int,
    seed: Union[int, str, random.Random, None] = 0,
    bound: int = 1000,
) -> Polynomial:
    """Dense random polynomial of total degree exactly ``d``.

    Coefficients are uniform field elements over F_p and integers in
    [-bound, bound] over Q. Deterministic in ``seed``.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    field: FieldSpec = ring.field
    while True:
        terms = {m: field.random_element(rng, bound) for m in monomials_up_to(ring.nvars, d)}
        p = Polynomial(ring, terms)
        if p.total_degree() == d:
            return p
