import math
import random

import pytest

from stablemaps.algebra import LinearChange, PolynomialRing
from stablemaps.groebner import INFINITE
from stablemaps.singularity import (
    CuspCurveError,
    DegenerateMappingError,
    MappingPair,
    NodeCurveError,
    build_jacobian_triple,
    check_topological_degree,
    count_cusps,
    count_nodes,
    cusp_census,
    formulas,
    infinity_checks,
    jacobian,
    node_census,
    node_ideal,
)

from conftest import GF, QQ, example1, example2, quadratic, sparse_polynomial


def parse(f, g, d1, d2, field=QQ):
    return MappingPair.parse(f, g, d1, d2, field)


# mapping pairs


def test_mapping_pair_validation():
    with pytest.raises(ValueError):
        parse("x^3", "y", 2, 1)
    with pytest.raises(ValueError):
        parse("x", "y^2", 2, 1)
    with pytest.raises(ValueError):
        parse("x", "y", 1, 2)
    assert not parse("x^2", "y", 2, 1).certifiable
    assert parse("x^2+y", "x+y^2", 2, 2).certifiable


# the Jacobian triple


def test_jacobian_triple_examples():
    F = parse("x", "y", 1, 1)
    R = F.ring
    assert build_jacobian_triple(F) == (R.one, R.zero, R.zero)
    F = parse("x^2", "y", 2, 1)
    assert build_jacobian_triple(F) == (R("2*x"), R.zero, R.constant(2))
    F = parse("x", "y^3+x*y", 3, 3)
    assert build_jacobian_triple(F) == (R("3*y^2+x"), R("-6*y"), R("x-3*y^2"))


def test_jacobian_triple_matches_bracket_form():
    # J_1 = f_x J_y - f_y J_x and J_2 = J_x g_y - J_y g_x, computed from J directly
    rng = random.Random(4)
    ring = PolynomialRing(("x", "y"), QQ)
    for _ in range(30):
        d1, d2 = rng.choice([(2, 2), (3, 1), (3, 2), (4, 3)])
        F = MappingPair(sparse_polynomial(ring, d1, rng, 0.7), sparse_polynomial(ring, d2, rng, 0.7), d1, d2)
        J, J11, J12 = build_jacobian_triple(F)
        f, g = F.f, F.g
        assert J == jacobian(F)
        assert J11 == -(f.diff("x") * J.diff("y") - f.diff("y") * J.diff("x"))
        assert J12 == J.diff("x") * g.diff("y") - J.diff("y") * g.diff("x")
        assert J.total_degree() <= d1 + d2 - 2
        assert J11.total_degree() <= 2 * d1 + d2 - 3
        assert J12.total_degree() <= d1 + 2 * d2 - 3


# formulas


@pytest.mark.parametrize("d, c, n", [((4, 4), 39, 204), ((5, 4), 54, 387), ((2, 2), 3, 0), ((3, 1), 2, 0),
                                     ((3, 2), 8, 10), ((4, 2), 15, 31)])
def test_formula_values(d, c, n):
    b = formulas(*d)
    assert (b.c_max, b.n_max) == (c, n)


@pytest.mark.parametrize("d1", range(1, 13))
def test_formula_families(d1):
    b = formulas(d1, 1)
    assert b.c_max == (d1 - 1) * (d1 - 2)
    assert 2 * b.n_max == (d1 - 1) * (d1 - 2) * (d1 - 3)
    b = formulas(d1, 2)
    assert b.c_max == d1 * d1 - 1
    assert 2 * b.n_max == 2 * d1 ** 3 - 4 * d1 ** 2 + d1 + 2 - math.gcd(d1, 2) * d1
    if d1 >= 3:
        b = formulas(d1, 3)
        assert b.c_max == d1 * d1 + 3 * d1 - 2
        assert 2 * b.n_max == 3 * d1 ** 3 + 2 * d1 ** 2 - 6 * d1 + 3 - math.gcd(d1, 3) * (d1 + 1)


def test_degree_bounds():
    b = formulas(4, 3)
    assert (b.R, b.D) == (5, 20)
    assert not formulas(2, 1).certifiable and formulas(3, 1).certifiable


# cusps


def test_cusp_normal_form():
    F = parse("y^3+x*y", "x", 3, 1)
    data = count_cusps(F)
    assert (data.distinct, data.total_multiplicity) == (1, 1)


def test_fold_has_no_cusps():
    data = count_cusps(parse("x^2", "y", 2, 1))
    assert (data.distinct, data.total_multiplicity) == (0, 0)


def test_example_cusps_small():
    data = count_cusps(example1(4, QQ))
    assert data.distinct == data.total_multiplicity == 6


def test_degenerate_mapping_is_an_error():
    F = parse("x+y", "x+y", 1, 1)
    for fn in (count_cusps, count_nodes, infinity_checks):
        with pytest.raises(DegenerateMappingError):
            fn(F)


def test_cusp_curve_is_an_error():
    # J = -3y^2: the critical curve is a double line, and every point of it satisfies the cusp equations
    with pytest.raises(CuspCurveError):
        count_cusps(parse("y^3", "x", 3, 1))


def test_cusp_ideal_dimension_is_recorded():
    data = count_cusps(example1(5))
    assert data.coordinate_change.is_identity
    assert data.as_dict()["total_multiplicity"] == "12"
    assert data.eliminant.total_degree() == 12


# nodes


def test_fold_has_no_nodes():
    data = count_nodes(parse("x^2", "y", 2, 1))
    assert (data.distinct, data.ordered_pair_multiplicity) == (0, 0)


def test_example_nodes():
    assert count_nodes(example1(4)).distinct == 3
    assert count_nodes(parse("x^3+x*y^2+x^2*y+x^2+x", "y", 3, 1, GF)).distinct == 0


def test_node_ideal_shape():
    F = quadratic(GF)
    I = node_ideal(F)
    assert I.ring.variables == ("u", "t", "p", "q", "x", "y")
    assert len(I.generators) == 6
    with pytest.raises(ValueError):
        node_ideal(F, (0, 0, 1, 0))


def test_node_curve_is_an_error():
    with pytest.raises(NodeCurveError):
        count_nodes(parse("x^2", "y^2", 2, 2, GF))


def test_nodes_ordered_pairs_are_twice_distinct_for_generic_example():
    data = count_nodes(example1(5))
    assert 2 * data.distinct == data.ordered_pair_multiplicity == 24


# censuses


def test_cusp_census_stops_when_separated():
    census = cusp_census(example1(4), retries=5)
    assert len(census.attempts) == 1 and census.distinct == 6


def test_census_retries_separate_collisions():
    # cusps at (-1, 0) and (0, +-1): two of them share x = 0 until the coordinates are changed
    F = parse("3*y^5-10*y^3+15*y+15*x*y", "x", 5, 1, GF)
    census = cusp_census(F, retries=5, seed=1)
    assert (census.first.distinct, census.first.total_multiplicity) == (2, 3)
    assert census.distinct == 3
    assert len(census.attempts) == 2


def test_census_is_deterministic_in_seed():
    F = parse("x^2*y+y^3+x", "x^2+y", 3, 2, GF)
    a = [d.as_dict() for d in node_census(F, 3, seed=9).attempts]
    b = [d.as_dict() for d in node_census(F, 3, seed=9).attempts]
    assert a == b


# behaviour at infinity


def test_infinity_examples():
    for d1, d2 in [(2, 1), (3, 2), (4, 4)]:
        rep = infinity_checks(parse(f"x^{d1}", f"y^{d2}", d1, d2))
        assert not rep.common_point_f1_f2
    assert infinity_checks(parse("x^2", "x*y+y", 2, 2)).common_point_f1_f2
    rep = infinity_checks(example1(4, QQ))
    assert not rep.common_point_f1_f2
    assert rep.jacobian_degree_max and rep.critical_curve_smooth and rep.passes
    assert rep.common_point_f1_J is None
    rep = infinity_checks(parse("x^3+y^2", "x^2+y^2", 3, 2))
    assert rep.common_point_f1_J is not None


def test_infinity_report_na_when_gcd_is_d2():
    rep = infinity_checks(quadratic())
    assert rep.common_point_f1_J is None
    assert rep.as_dict()["common_point_f1_J"] == "N/A"


def test_singular_critical_curve_detected():
    # J = 2x * 2y: two crossing lines
    rep = infinity_checks(parse("x^2", "y^2", 2, 2))
    assert not rep.critical_curve_smooth and not rep.passes


def test_topological_degree():
    assert check_topological_degree(parse("x^2", "y^2", 2, 2, GF))
    assert not check_topological_degree(parse("x", "x", 1, 1, GF))
    assert check_topological_degree(quadratic(GF))
    assert check_topological_degree(quadratic(QQ))


# invariants on random mappings


def _random_mapping(rng, d1, d2):
    ring = PolynomialRing(("x", "y"), GF)
    while True:
        F = MappingPair(sparse_polynomial(ring, d1, rng), sparse_polynomial(ring, d2, rng), d1, d2)
        if jacobian(F):
            return F


@pytest.mark.parametrize("d1, d2", [(2, 2), (3, 1), (3, 2)])
def test_random_mapping_invariants(d1, d2):
    rng = random.Random(100 * d1 + d2)
    bounds = formulas(d1, d2)
    stats = {"mappings": 0, "cusp_curves": 0, "node_curves": 0, "proper": 0}
    while stats["mappings"] < 50:
        F = _random_mapping(rng, d1, d2)
        stats["mappings"] += 1
        rep = infinity_checks(F)
        stats["proper"] += rep.passes
        try:
            c = count_cusps(F)
        except CuspCurveError:
            stats["cusp_curves"] += 1
            assert not rep.passes
            continue
        assert c.distinct <= c.total_multiplicity
        try:
            moved = count_cusps(F, LinearChange.random(rng, 50)).total_multiplicity
        except CuspCurveError:
            # a vertical curve in the cusp locus projects to finitely many x under the identity only
            moved = INFINITE
        assert moved == c.total_multiplicity
        if rep.passes:
            assert c.total_multiplicity <= bounds.c_max
        try:
            n = count_nodes(F)
        except NodeCurveError:
            stats["node_curves"] += 1
            continue
        assert 2 * n.distinct <= n.ordered_pair_multiplicity or n.ordered_pair_multiplicity == INFINITE
        if rep.passes:
            assert n.distinct <= bounds.n_max
            if n.distinct == bounds.n_max:
                assert n.ordered_pair_multiplicity == 2 * n.distinct
    # the sampler must exercise both regimes
    assert 0 < stats["proper"] < 50


# coordinate-change invariance on fixtures


FIXTURES = [
    lambda: example1(3), lambda: example1(4), lambda: example1(6), lambda: example1(8),
    lambda: example2(3), lambda: example2(4), lambda: quadratic(GF), lambda: quadratic(QQ),
    lambda: parse("y^3+x*y", "x", 3, 1),
]


@pytest.mark.parametrize("make", FIXTURES)
def test_cusp_total_is_coordinate_independent(make):
    F = make()
    base = count_cusps(F)
    rng = random.Random(17)
    best = base.distinct
    for _ in range(5):
        data = count_cusps(F, LinearChange.random(rng, 1000))
        assert data.total_multiplicity == base.total_multiplicity
        assert data.distinct <= data.total_multiplicity
        best = max(best, data.distinct)
    # all fixture cusps are simple, so a generic change separates them
    assert best == base.total_multiplicity


@pytest.mark.parametrize("make", [lambda: example1(4), lambda: example1(5), lambda: example2(3), lambda: quadratic(GF)])
def test_node_total_is_randomizer_independent(make):
    F = make()
    base = count_nodes(F)
    rng = random.Random(23)
    for _ in range(3):
        rz = (rng.randint(1, 999), rng.randint(-999, 999), rng.randint(-999, 999), rng.randint(1, 999))
        data = count_nodes(F, rz)
        assert data.ordered_pair_multiplicity == base.ordered_pair_multiplicity
        assert data.distinct <= base.distinct or 2 * data.distinct <= data.ordered_pair_multiplicity
