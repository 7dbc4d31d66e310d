"""Sylvester resultants, computed independently of the Groebner engine."""

from __future__ import annotations

from ..algebra.polynomial import Polynomial


def coefficients_in(p: Polynomial, var) -> list:
    """Coefficients of ``p`` as a polynomial in ``var`` (lowest first), in the same ring."""
    i = p.ring.index(var)
    buckets: dict = {}
    for m, c in p.terms.items():
        buckets.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = c
    deg = max(buckets, default=-1)
    return [Polynomial(p.ring, buckets.get(k, {}), _clean=True) for k in range(deg + 1)]


def sylvester_matrix(a: list, b: list) -> list:
    """Sylvester matrix of coefficient lists given highest degree first."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    zero = a[0] * 0
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(a) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(b) + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(rows: list):
    """Fraction-free determinant; entries need ``*``, ``-`` and exact division."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = t if prev is None else _exact_div(t, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _exact_div(t, d):
    if isinstance(t, Polynomial):
        return t.exact_div(d)
    q = t / d
    return q


def resultant(p: Polynomial, q: Polynomial, var) -> Polynomial:
    """Determinant of the Sylvester matrix of ``p`` and ``q`` with respect to ``var``."""
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise ValueError(f"resultant needs positive degree in {var}")
    a = coefficients_in(p, var)[::-1]
    b = coefficients_in(q, var)[::-1]
    return bareiss_determinant(sylvester_matrix(a, b))


def binary_form_resultant(f: Polynomial, g: Polynomial, df: int, dg: int, variables=("x", "y")):
    """Resultant of two binary forms of formal degrees ``df`` and ``dg``.

    Vanishes iff the forms share a projective root (a formally-vanishing form
    counts as sharing every root). Returns a field element.
    """
    field = f.ring.field
    ix, iy = f.ring.index(variables[0]), f.ring.index(variables[1])

    def coeffs(h, d):
        out = [field.zero] * (d + 1)
        for m, c in h.terms.items():
            if sum(m) != d or m[ix] + m[iy] != d:
                raise ValueError(f"{h} is not a binary form of degree {d}")
            out[d - m[ix]] = c  # highest power of x first
        return out

    if df == 0 or dg == 0:
        # Res(c, g) = c^dg; a nonzero constant has no roots
        c = coeffs(f, 0)[0] if df == 0 else coeffs(g, 0)[0]
        return c ** (dg if df == 0 else df) if not field.prime else pow(c, dg if df == 0 else df, field.prime)
    rows = sylvester_matrix(coeffs(f, df), coeffs(g, dg))
    if field.prime:
        p = field.prime
        return _det_mod_p(rows, p)
    return bareiss_determinant(rows)


def _det_mod_p(rows: list, p: int) -> int:
    a = [[v % p for v in r] for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            if a[i][k]:
                fct = a[i][k] * inv % p
                for j in range(k, n):
                    a[i][j] = (a[i][j] - fct * a[k][j]) % p
    return det % p
