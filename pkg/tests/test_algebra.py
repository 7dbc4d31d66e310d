import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stablemaps.algebra import (
    FieldSpec,
    LinearChange,
    Polynomial,
    PolynomialRing,
    PolynomialSyntaxError,
    SingularMatrixError,
    apply_linear_change,
    differentiate,
    format_polynomial,
    is_prime,
    leading_form,
    parse_polynomial,
    poly_mul,
    random_polynomial,
    random_prime,
)
from stablemaps.algebra.fields import prime_window

F101 = FieldSpec.fp(101, floor=2)
R101 = PolynomialRing(("x", "y"), F101)
RQ = PolynomialRing(("x", "y"))


def polys(ring, max_exp=3, max_terms=5):
    coeff = st.integers(-7, 7) if ring.field.is_prime_field else st.fractions(max_denominator=5).filter(
        lambda q: abs(q) <= 7)
    terms = st.dictionaries(st.tuples(st.integers(0, max_exp), st.integers(0, max_exp)), coeff,
                            max_size=max_terms)
    return terms.map(lambda t: Polynomial(ring, {m: ring.field(c) for m, c in t.items()}))


def at(p, x, y):
    return p.evaluate({"x": x, "y": y})


# fields


def test_primality_matches_trial_division():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))

    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]
    assert is_prime(2147483647) and not is_prime(2147483647 * 2147483629)
    # strong pseudoprime to several small bases
    assert not is_prime(3215031751)


def test_prime_field_rejects_composites_and_small_primes():
    with pytest.raises(ValueError):
        FieldSpec.fp(2 ** 31)
    with pytest.raises(ValueError):
        FieldSpec.fp(101)
    assert FieldSpec.fp(101, floor=2).prime == 101


def test_prime_field_arithmetic():
    f = F101
    assert f(-1) == 100
    assert f(Fraction(1, 2)) == 51
    assert f.mul(f.inv(37), 37) == 1
    with pytest.raises(ZeroDivisionError):
        f(Fraction(1, 101))
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_random_prime_window(monkeypatch):
    rng = random.Random(1)
    p = random_prime(rng)
    assert 2 ** 30 <= p < 2 ** 31 and is_prime(p)
    assert random_prime(random.Random(1)) == p
    monkeypatch.setenv("STABLEMAPS_PRIME_WINDOW", "1000,2000")
    assert prime_window() == (1000, 2000)
    assert 1000 <= random_prime(rng) < 2000


# polynomial arithmetic


def test_product_example_mod_101():
    x, y = R101.gens
    prod = poly_mul(x ** 2 + y, x + y ** 2)
    assert prod == x ** 3 + x ** 2 * y ** 2 + x * y + y ** 3
    # cross-check by evaluation on a grid: F_101 points determine a degree-4 polynomial
    for a in range(0, 101, 7):
        for b in range(0, 101, 11):
            assert at(prod, a, b) == (a * a + b) * (a + b * b) % 101


def test_differentiate_example():
    x, y = R101.gens
    assert differentiate(x ** 3 * y ** 2 + 5 * x, "x") == 3 * x ** 2 * y ** 2 + 5
    assert differentiate(x ** 3 * y ** 2 + 5 * x, "y") == 2 * x ** 3 * y


def test_derivative_exponent_reduced_mod_p():
    x, y = R101.gens
    assert differentiate(x ** 101, "x").is_zero()
    assert differentiate(x ** 102, "x") == 102 * x ** 101


def test_zero_polynomial_conventions():
    assert RQ.zero.total_degree() == -1
    assert RQ.zero.is_zero() and not RQ.zero
    assert RQ.one.total_degree() == 0


def test_ring_mismatch():
    with pytest.raises(ValueError):
        RQ.gen("x") + R101.gen("x")


@settings(max_examples=1000, deadline=None)
@given(polys(R101), polys(R101), polys(R101))
def test_ring_axioms_mod_p(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == R101.zero
    assert a * R101.one == a


@settings(max_examples=300, deadline=None)
@given(polys(RQ), polys(RQ), polys(RQ))
def test_ring_axioms_over_rationals(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b).total_degree() <= max(a.total_degree(), b.total_degree())
    if a and b:
        assert (a * b).total_degree() == a.total_degree() + b.total_degree()


@settings(max_examples=300, deadline=None)
@given(polys(R101), polys(R101), st.integers(0, 100), st.integers(0, 100))
def test_evaluation_is_a_ring_homomorphism(a, b, u, v):
    assert at(a * b, u, v) == at(a, u, v) * at(b, u, v) % 101
    assert at(a + b, u, v) == (at(a, u, v) + at(b, u, v)) % 101


@settings(max_examples=300, deadline=None)
@given(polys(RQ), polys(RQ))
def test_leibniz_rule(a, b):
    for v in ("x", "y"):
        assert (a * b).diff(v) == a.diff(v) * b + a * b.diff(v)


@settings(max_examples=200, deadline=None)
@given(polys(RQ))
def test_mixed_partials_commute(a):
    assert a.diff("x").diff("y") == a.diff("y").diff("x")


# linear changes


def test_linear_change_example():
    x, y = R101.gens
    L = LinearChange(((2, 1), (0, 1)))
    assert apply_linear_change(x ** 2 - y, L) == 4 * x ** 2 + 4 * x * y + y ** 2 - y


def test_linear_change_rejects_singular():
    with pytest.raises(SingularMatrixError):
        LinearChange(((1, 2), (2, 4)))
    # invertible over Q but not modulo 101
    L = LinearChange(((101, 0), (0, 1)))
    with pytest.raises(SingularMatrixError):
        apply_linear_change(R101.gen("x"), L)


@settings(max_examples=200, deadline=None)
@given(polys(RQ), polys(RQ), st.integers(0, 10 ** 6))
def test_linear_change_is_multiplicative(a, b, seed):
    L = LinearChange.random(random.Random(seed), 20)
    assert apply_linear_change(a * b, L) == apply_linear_change(a, L) * apply_linear_change(b, L)
    assert apply_linear_change(a + b, L) == apply_linear_change(a, L) + apply_linear_change(b, L)


@settings(max_examples=200, deadline=None)
@given(polys(RQ), st.integers(0, 10 ** 6))
def test_linear_change_composition(a, seed):
    # substituting with L1 and then with L2 is the single substitution by L1 @ L2
    rng = random.Random(seed)
    L1, L2 = LinearChange.random(rng, 9), LinearChange.random(rng, 9)
    twice = apply_linear_change(apply_linear_change(a, L1), L2)
    assert twice == apply_linear_change(a, L1 @ L2)


@settings(max_examples=200, deadline=None)
@given(polys(RQ), st.integers(0, 10 ** 6))
def test_linear_change_preserves_degree(a, seed):
    L = LinearChange.random(random.Random(seed), 50)
    assert apply_linear_change(a, L).total_degree() == a.total_degree()


def test_leading_form():
    x, y = RQ.gens
    assert leading_form(x ** 3 + x * y ** 2 + y + 1, 3) == x ** 3 + x * y ** 2
    assert leading_form(x + 1, 3).is_zero()
    with pytest.raises(ValueError):
        leading_form(x ** 4, 3)


@settings(max_examples=200, deadline=None)
@given(polys(RQ))
def test_leading_form_is_top_homogeneous_part(a):
    d = a.total_degree()
    if d < 0:
        return
    lf = leading_form(a, d)
    assert all(sum(m) == d for m in lf.terms)
    assert (a - lf).total_degree() < d


def test_random_polynomial_exact_degree_and_determinism():
    p = random_polynomial(R101, 4, seed=3)
    assert p.total_degree() == 4
    assert p == random_polynomial(R101, 4, seed=3)
    assert p != random_polynomial(R101, 4, seed=4)
    q = random_polynomial(RQ, 3, seed=3, bound=5)
    assert all(c.denominator == 1 and abs(c) <= 5 for c in q.terms.values())


# parsing and printing


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x^2+y", "x^2 + y"),
        ("-3*x*y^2 + 1/2", "-3*x*y^2 + 1/2"),
        ("2*x*x", "2*x^2"),
        ("y - y", "0"),
        ("x^3 - 2*x^3", "-x^3"),
    ],
)
def test_parse_and_format(text, expected):
    assert format_polynomial(parse_polynomial(text, RQ)) == expected


def test_format_mod_p_uses_least_residues():
    assert str(R101("-x + 1/2")) == "100*x + 51"


@pytest.mark.parametrize("bad, offset", [("x^^2", 2), ("x + * y", 4), ("z", 0), ("1/0", 2), ("x^", 2)])
def test_parse_errors_report_offset(bad, offset):
    with pytest.raises(PolynomialSyntaxError) as info:
        parse_polynomial(bad, RQ)
    assert info.value.offset == offset


@settings(max_examples=300, deadline=None)
@given(polys(RQ))
def test_print_parse_round_trip(a):
    assert parse_polynomial(format_polynomial(a), RQ) == a


def test_parse_agrees_with_sympy():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(5)
    for _ in range(50):
        a = random_polynomial(RQ, rng.randint(0, 4), rng, bound=30)
        expr = sympy.sympify(format_polynomial(a).replace("^", "**"))
        ours = {m: c for m, c in a.terms.items()}
        theirs = {m: Fraction(int(c.p), int(c.q)) for m, c in sympy.Poly(expr, *sympy.symbols("x y")).terms()}
        assert ours == theirs
