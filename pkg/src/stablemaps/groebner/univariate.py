"""Dense univariate helpers: gcd, derivative and squarefree part."""

from __future__ import annotations

from ..algebra.fields import FieldSpec
from ..algebra.polynomial import Polynomial


class CharacteristicTooSmallError(ArithmeticError):
    """The field characteristic does not exceed the degree; resample the prime."""


def _strip(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def to_dense(p: Polynomial, var) -> list:
    """Coefficient list (lowest degree first) of a polynomial in ``var`` only."""
    i = p.ring.index(var)
    out = [p.ring.field.zero] * (p.degree(var) + 1 if p else 0)
    for m, c in p.terms.items():
        if any(e for j, e in enumerate(m) if j != i):
            raise ValueError(f"{p} is not univariate in {var}")
        out[m[i]] = c
    return out


def from_dense(coeffs: list, ring, var) -> Polynomial:
    i = ring.index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[i] = k
            terms[tuple(e)] = c
    return Polynomial(ring, terms, _clean=True)


def dense_divmod(a: list, b: list, f: FieldSpec):
    a = list(a)
    b = _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = f.inv(b[-1])
    q = [f.zero] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = f.mul(a[k + len(b) - 1], inv)
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = f.sub(a[k + j], f.mul(c, bj))
    return _strip(q), _strip(a[: len(b) - 1])


def dense_monic(a: list, f: FieldSpec) -> list:
    a = _strip(list(a))
    if not a:
        return a
    inv = f.inv(a[-1])
    return [f.mul(c, inv) for c in a]


def dense_gcd(a: list, b: list, f: FieldSpec) -> list:
    a, b = _strip(list(a)), _strip(list(b))
    while b:
        a, b = b, dense_divmod(a, b, f)[1]
    return dense_monic(a, f)


def dense_derivative(a: list, f: FieldSpec) -> list:
    return _strip([f.mul(f(k), c) for k, c in enumerate(a)][1:])


def squarefree_part(p: Polynomial, var=None) -> Polynomial:
    """Monic p / gcd(p, p'): the same roots as ``p``, each simple."""
    if not p:
        raise ValueError("squarefree part of the zero polynomial")
    if var is None:
        used = p.variables_used()
        if len(used) > 1:
            raise ValueError(f"{p} is not univariate")
        var = used[0] if used else p.ring.variables[0]
    f = p.ring.field
    a = to_dense(p, var)
    deg = len(a) - 1
    if f.prime and f.prime <= deg:
        raise CharacteristicTooSmallError(f"characteristic {f.prime} <= degree {deg}")
    g = dense_gcd(a, dense_derivative(a, f), f)
    q, r = dense_divmod(a, g, f)
    assert not r
    return from_dense(dense_monic(q, f), p.ring, var)


def univariate_gcd(p: Polynomial, q: Polynomial, var) -> Polynomial:
    f = p.ring.field
    return from_dense(dense_gcd(to_dense(p, var), to_dense(q, var), f), p.ring, var)
