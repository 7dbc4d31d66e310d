"""Text form of polynomials.

Grammar (whitespace is ignored)::

    poly   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := INT ['/' INT] | VAR ['^' INT]

Printing is canonical: terms in descending lex order of exponent tuples,
coefficients over F_p as least non-negative residues.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomial import Polynomial, PolynomialRing


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("var", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            toks.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    toks = _tokenize(text)
    i = 0
    n = ring.nvars
    terms: dict = {}

    def peek():
        return toks[i]

    def expect_int():
        nonlocal i
        kind, val, off = toks[i]
        if kind != "int":
            raise PolynomialSyntaxError(f"expected an integer, found {val or 'end of input'!r}", off)
        i += 1
        return int(val)

    def parse_term():
        nonlocal i
        coef = Fraction(1)
        exps = [0] * n
        while True:
            kind, val, off = peek()
            if kind == "int":
                i += 1
                num = int(val)
                if peek()[:2] == ("op", "/"):
                    i += 1
                    den = expect_int()
                    if den == 0:
                        raise PolynomialSyntaxError("zero denominator", toks[i - 1][2])
                    coef *= Fraction(num, den)
                else:
                    coef *= num
            elif kind == "var":
                if val not in ring.variables:
                    raise PolynomialSyntaxError(f"unknown variable {val!r}", off)
                i += 1
                k = 1
                if peek()[:2] == ("op", "^"):
                    i += 1
                    k = expect_int()
                exps[ring.variables.index(val)] += k
            else:
                raise PolynomialSyntaxError(f"unexpected {val or 'end of input'!r}", off)
            if peek()[:2] == ("op", "*"):
                i += 1
                continue
            return tuple(exps), coef

    sign = 1
    if peek()[:2] in (("op", "-"), ("op", "+")):
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    while True:
        m, c = parse_term()
        terms[m] = terms.get(m, 0) + sign * c
        kind, val, off = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise PolynomialSyntaxError(f"unexpected {val!r}", off)
    return Polynomial(ring, terms)


def _format_monomial(ring: PolynomialRing, m) -> str:
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    prime = p.ring.field.prime
    for m, c in p.items():
        neg = False
        if not prime and c < 0:
            neg, c = True, -c
        mono = _format_monomial(p.ring, m)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
