"""Cusps and nodes of plane polynomial maps F = (f, g).

Cusps are counted from the ideal (J, J11, J12) in k[x, y]; nodes from the
six-variable ideal in k[u, t, p, q, x, y] pairing two critical points with
the same image. Both counts follow the same recipe: a Groebner basis gives
the total multiplicity (quotient dimension), and the squarefree part of the
eliminant onto one variable gives the number of distinct values.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .algebra.fields import FieldSpec
from .algebra.polynomial import Polynomial, PolynomialRing
from .algebra.transforms import LinearChange, apply_linear_change, leading_form
from .groebner import (
    INFINITE,
    Ideal,
    binary_form_resultant,
    buchberger,
    eliminant,
    is_zero_dimensional,
    quotient_dimension,
    squarefree_part,
)

log = logging.getLogger(__name__)

NODE_VARIABLES = ("u", "t", "p", "q", "x", "y")


class DegenerateMappingError(ValueError):
    """J(F) vanishes identically."""


class CuspCurveError(ArithmeticError):
    """The cusp ideal has a positive-dimensional component invisible to elimination."""


class NodeCurveError(ArithmeticError):
    """The node ideal is not zero-dimensional."""


@dataclass(frozen=True)
class MappingPair:
    """A map F = (f, g) in Omega_2(d1, d2): deg f <= d1, deg g <= d2, d1 >= d2 >= 1."""

    f: Polynomial
    g: Polynomial
    d1: int
    d2: int

    def __post_init__(self):
        if self.f.ring != self.g.ring:
            raise ValueError("f and g must share a ring")
        if set(self.f.ring.variables) != {"x", "y"}:
            raise ValueError("mappings live in a ring with variables x, y")
        if not self.d1 >= self.d2 >= 1:
            raise ValueError(f"need d1 >= d2 >= 1, got ({self.d1}, {self.d2})")
        if self.f.total_degree() > self.d1:
            raise ValueError(f"deg f = {self.f.total_degree()} > d1 = {self.d1}")
        if self.g.total_degree() > self.d2:
            raise ValueError(f"deg g = {self.g.total_degree()} > d2 = {self.d2}")

    @classmethod
    def parse(cls, f: str, g: str, d1: int, d2: int, field: FieldSpec = None) -> "MappingPair":
        ring = PolynomialRing(("x", "y"), field or FieldSpec.rationals())
        return cls(ring(f), ring(g), d1, d2)

    @property
    def ring(self) -> PolynomialRing:
        return self.f.ring

    @property
    def field(self) -> FieldSpec:
        return self.f.ring.field

    @property
    def certifiable(self) -> bool:
        return self.d1 * self.d2 > 2

    def over(self, field: FieldSpec) -> "MappingPair":
        """The same mapping with coefficients mapped into ``field``."""
        if field == self.field:
            return self
        return MappingPair(self.f.change_field(field), self.g.change_field(field), self.d1, self.d2)

    def __str__(self):
        return f"({self.f}, {self.g})"


@dataclass(frozen=True)
class DegreeBounds:
    d1: int
    d2: int
    R: int
    D: int
    c_max: int
    n_max: int

    @property
    def certifiable(self) -> bool:
        return self.d1 * self.d2 > 2


def formulas(d1: int, d2: int) -> DegreeBounds:
    """Degrees of the critical curve and discriminant, and the maximal cusp/node counts."""
    R = d1 + d2 - 2
    c = d1 * d1 + d2 * d2 + 3 * d1 * d2 - 6 * d1 - 6 * d2 + 7
    twice_n = (d1 * d2 - 4) * (R * R - 2) - (math.gcd(d1, d2) - 5) * R - 6
    assert twice_n % 2 == 0
    return DegreeBounds(d1, d2, R, R * d1, c, twice_n // 2)


def build_jacobian_triple(F: MappingPair):
    """(J, J11, J12) for F = (f, g), written out in terms of partial derivatives."""
    f, g = F.f, F.g
    fx, fy, gx, gy = f.diff("x"), f.diff("y"), g.diff("x"), g.diff("y")
    fxx, fxy, fyy = fx.diff("x"), fx.diff("y"), fy.diff("y")
    gxx, gxy, gyy = gx.diff("x"), gx.diff("y"), gy.diff("y")
    J = fx * gy - fy * gx
    Jx = fxx * gy + fx * gxy - fxy * gx - fy * gxx
    Jy = fxy * gy + fx * gyy - fyy * gx - fy * gxy
    J11 = Jx * fy - Jy * fx
    J12 = Jx * gy - Jy * gx
    return J, J11, J12


def jacobian(F: MappingPair) -> Polynomial:
    f, g = F.f, F.g
    return f.diff("x") * g.diff("y") - f.diff("y") * g.diff("x")


@dataclass
class CuspData:
    J: Polynomial
    J11: Polynomial
    J12: Polynomial
    coordinate_change: LinearChange
    distinct: int
    total_multiplicity: object  # int or INFINITE
    eliminant: Polynomial = None

    def as_dict(self) -> dict:
        return {
            "coordinate_change": self.coordinate_change.as_dict(),
            "distinct": self.distinct,
            "total_multiplicity": _mult_str(self.total_multiplicity),
        }


@dataclass
class NodeData:
    randomizers: tuple  # (alpha, beta, a, b)
    distinct: int
    ordered_pair_multiplicity: object  # int or INFINITE
    eliminant: Polynomial = None

    def as_dict(self) -> dict:
        return {
            "randomizers": [str(v) for v in self.randomizers],
            "distinct": self.distinct,
            "ordered_pair_multiplicity": _mult_str(self.ordered_pair_multiplicity),
        }


def _mult_str(v) -> str:
    return "INFINITE" if v == INFINITE else str(v)


def _distinct_roots(h: Polynomial) -> int:
    if not h:
        raise ValueError("zero eliminant has no finite root count")
    return squarefree_part(h).total_degree()


def count_cusps(F: MappingPair, L: Optional[LinearChange] = None) -> CuspData:
    """Distinct cusp x-coordinates and the total cusp multiplicity after the change L."""
    L = L or LinearChange.identity()
    G_map = MappingPair(apply_linear_change(F.f, L), apply_linear_change(F.g, L), F.d1, F.d2)
    J, J11, J12 = build_jacobian_triple(G_map)
    if not J:
        raise DegenerateMappingError(f"J(F) vanishes identically for {F}")
    gens = [J, J11, J12]
    G = buchberger(gens)
    total = quotient_dimension(G)
    h = eliminant(gens, "x", G)
    if not h:
        raise CuspCurveError(f"cusp locus of {F} contains a curve (elimination ideal is zero)")
    data = CuspData(J, J11, J12, L, _distinct_roots(h), total, h)
    log.debug("cusps of %s under %s: distinct=%s total=%s", F, L.matrix, data.distinct, total)
    return data


def node_ideal(F: MappingPair, randomizers=(1, 0, 1, 0)) -> Ideal:
    """The pair ideal in k[u, t, p, q, x, y]; defaults reproduce the plain x - p separator."""
    alpha, beta, a, b = randomizers
    ring = PolynomialRing(NODE_VARIABLES, F.field)
    u, t, p, q, x, y = ring.gens
    fxy, gxy = F.f.embed(ring), F.g.embed(ring)
    to_pq = {"x": p, "y": q}
    fpq, gpq = fxy.compose(to_pq), gxy.compose(to_pq)
    J = jacobian(F).embed(ring)
    Jpq = J.compose(to_pq)
    sep = (x - p).scale(alpha) + (y - q).scale(beta)
    if not sep:
        raise ValueError("separator alpha*(x-p) + beta*(y-q) vanishes")
    gens = (J, Jpq, fxy - fpq, gxy - gpq, fxy.scale(a) + gxy.scale(b) - u, sep * t - 1)
    return Ideal(ring, gens)


def count_nodes(F: MappingPair, randomizers=(1, 0, 1, 0)) -> NodeData:
    """Distinct node values of u = a f + b g and the total ordered-pair multiplicity."""
    if not jacobian(F):
        raise DegenerateMappingError(f"J(F) vanishes identically for {F}")
    field = F.field
    randomizers = tuple(field(v) for v in randomizers)
    I = node_ideal(F, randomizers)
    G = buchberger(I)
    if not is_zero_dimensional(G):
        raise NodeCurveError(f"node locus of {F} contains a curve")
    total = quotient_dimension(G)
    h = eliminant(I, "u", G)
    data = NodeData(randomizers, _distinct_roots(h), total, h)
    log.debug("nodes of %s with %s: distinct=%s total=%s (%s)", F, randomizers, data.distinct, total,
              G.stats)
    return data


@dataclass
class Census:
    """Repeated counts under fresh randomizations; ``best`` has the largest distinct count."""

    attempts: list = field(default_factory=list)

    @property
    def best(self):
        return max(self.attempts, key=lambda a: a.distinct)

    @property
    def distinct(self) -> int:
        return self.best.distinct

    @property
    def first(self):
        return self.attempts[0]


def _rng(seed, purpose: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{purpose}:{index}")


def cusp_census(F: MappingPair, retries: int = 5, seed=0, bound: int = 1000) -> Census:
    """Identity change first, then up to ``retries`` random changes.

    Stops once distinct equals the total multiplicity, since no change can
    separate more points than that.
    """
    census = Census()
    for i in range(retries + 1):
        L = LinearChange.identity() if i == 0 else LinearChange.random(
            _rng(seed, "cusp", i), bound, seed=f"{seed}:cusp:{i}")
        if F.field.prime and F.field(L.det()) == 0:
            continue
        data = count_cusps(F, L)
        census.attempts.append(data)
        if data.distinct == data.total_multiplicity:
            break
    return census


def node_census(F: MappingPair, retries: int = 5, seed=0, bound: int = 1000) -> Census:
    """Default randomizers first, then up to ``retries`` random (alpha, beta, a, b).

    Every node contributes two ordered pairs with one u-value, so the search
    stops once 2 * distinct reaches the ordered-pair multiplicity.
    """
    census = Census()
    for i in range(retries + 1):
        if i == 0:
            rz = (1, 0, 1, 0)
        else:
            rng = _rng(seed, "node", i)
            rz = tuple(rng.randint(-bound, bound) for _ in range(4))
            if rz[0] == rz[1] == 0:
                rz = (1,) + rz[1:]
        data = count_nodes(F, rz)
        census.attempts.append(data)
        if 2 * data.distinct == data.ordered_pair_multiplicity:
            break
    return census


@dataclass
class InfinityReport:
    common_point_f1_f2: bool
    jacobian_degree_max: bool
    critical_curve_smooth: bool
    common_point_f1_J: Optional[bool]

    @property
    def passes(self) -> bool:
        return (not self.common_point_f1_f2) and self.critical_curve_smooth

    def as_dict(self) -> dict:
        return {
            "common_point_f1_f2": self.common_point_f1_f2,
            "jacobian_degree_max": self.jacobian_degree_max,
            "critical_curve_smooth": self.critical_curve_smooth,
            "common_point_f1_J": "N/A" if self.common_point_f1_J is None else self.common_point_f1_J,
        }


def infinity_checks(F: MappingPair) -> InfinityReport:
    """Behaviour at infinity and smoothness of the critical curve."""
    J = jacobian(F)
    if not J:
        raise DegenerateMappingError(f"J(F) vanishes identically for {F}")
    R = F.d1 + F.d2 - 2
    lf, lg = leading_form(F.f, F.d1), leading_form(F.g, F.d2)
    common_fg = not binary_form_resultant(lf, lg, F.d1, F.d2)
    smooth = buchberger([J, J.diff("x"), J.diff("y")]).is_unit
    common_fJ = None
    if math.gcd(F.d1, F.d2) != F.d2:
        common_fJ = not binary_form_resultant(lf, leading_form(J, R), F.d1, R)
    return InfinityReport(common_fg, J.total_degree() == R, smooth, common_fJ)


def check_topological_degree(F: MappingPair, seed=0, bound: int = 1000) -> bool:
    """Whether a random fibre F^{-1}(a, b) is finite with d1*d2 points counted with multiplicity.

    A failed draw is retried once with a fresh target before answering False.
    """
    field = F.field
    for attempt in range(2):
        rng = _rng(seed, "fibre", attempt)
        a, b = field.random_element(rng, bound), field.random_element(rng, bound)
        G = buchberger([F.f - a, F.g - b])
        if quotient_dimension(G) == F.d1 * F.d2:
            return True
    return False
