"""Sparse multivariate polynomials over an exact field.

A polynomial is a map from exponent tuples to nonzero field elements.
Instances are treated as immutable; every operation returns a new object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .fields import QQ, FieldSpec

Monomial = tuple  # tuple[int, ...], one exponent per ring variable


class RingMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PolynomialRing:
    variables: tuple
    field: FieldSpec = QQ

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"repeated variable in {self.variables}")
        if not 1 <= len(self.variables) <= 6:
            raise ValueError("rings have between 1 and 6 variables")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, var) -> int:
        if isinstance(var, Polynomial):
            var = var.as_variable()
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r} in ring {self.variables}") from None

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exps, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.field(c)})

    def gen(self, var) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(var)] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    @property
    def gens(self) -> tuple:
        return tuple(self.gen(v) for v in self.variables)

    def with_field(self, field: FieldSpec) -> "PolynomialRing":
        return PolynomialRing(self.variables, field)

    def __call__(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping, *, _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            n = ring.nvars
            coerce = ring.field
            clean = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial {m} for ring {ring}")
                c = coerce(c)
                if c:
                    clean[m] = c
            self.terms = clean
        self._hash = None

    # -- basic queries -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree(self, var) -> int:
        i = self.ring.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def variables_used(self) -> tuple:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(v for i, v in enumerate(self.ring.variables) if i in used)

    def as_variable(self) -> str:
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if c == 1 and sum(m) == 1:
                return self.ring.variables[m.index(1)]
        raise ValueError(f"{self} is not a ring variable")

    def items(self):
        """Terms in descending lex order of exponent tuples."""
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self):
        """Lex-leading (monomial, coefficient) in the ring's variable order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self.scale(self.ring.field.inv(c))

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, f.zero), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        p = f.prime
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: Fraction(c) for m, c in out.items() if c}
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: f.mul(a, c) for m, a in self.terms.items()}, _clean=True)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution -------------------------------------
    def diff(self, var) -> "Polynomial":
        """Formal partial derivative; exponent factors are reduced in the field."""
        i = self.ring.index(var)
        f = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                v = f.mul(c, f(e))
                if v:
                    out[m[:i] + (e - 1,) + m[i + 1:]] = v
        return Polynomial(self.ring, out, _clean=True)

    def compose(self, images: Mapping, ring: PolynomialRing = None) -> "Polynomial":
        """Substitute ``images[var]`` (polynomials in ``ring``) for each variable.

        Variables missing from ``images`` are mapped to the same-named
        generator of the target ring.
        """
        ring = ring or self.ring
        subs = []
        for v in self.ring.variables:
            img = images.get(v)
            if img is None:
                img = ring.gen(v)
            elif not isinstance(img, Polynomial):
                img = ring.constant(img)
            elif img.ring != ring:
                raise RingMismatchError(f"image of {v} lives in {img.ring}, expected {ring}")
            subs.append(img)
        powers = [{0: ring.one} for _ in subs]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * subs[i]
            return cache[e]

        out = ring.zero
        for m, c in self.terms.items():
            t = ring.constant(ring.field(self.ring.field.lift(c)))
            for i, e in enumerate(m):
                if e:
                    t = t * power(i, e)
            out = out + t
        return out

    def evaluate(self, values: Mapping):
        """Evaluate at field values given per variable name (all variables required)."""
        f = self.ring.field
        vals = [f(values[v]) for v in self.ring.variables]
        acc = f.zero
        for m, c in self.terms.items():
            t = c
            for x, e in zip(vals, m):
                if e:
                    t = f.mul(t, x ** e if not f.prime else pow(x, e, f.prime))
            acc = f.add(acc, t)
        return acc

    def embed(self, ring: PolynomialRing) -> "Polynomial":
        """Move into a ring containing the same variable names (same field)."""
        idx = [ring.index(v) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for j, k in zip(idx, m):
                e[j] = k
            out[tuple(e)] = c
        if ring.field == self.ring.field:
            return Polynomial(ring, out, _clean=True)
        return Polynomial(ring, {m: self.ring.field.lift(c) for m, c in out.items()})

    def rename(self, mapping: Mapping, ring: PolynomialRing) -> "Polynomial":
        """Rename variables (old name -> new name) into ``ring``."""
        idx = [ring.index(mapping.get(v, v)) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for j, k in zip(idx, m):
                e[j] += k
            out[tuple(e)] = c
        return Polynomial(ring, out)

    def change_field(self, field: FieldSpec) -> "Polynomial":
        """Reduce (or lift) coefficients into ``field``.

        Raises ZeroDivisionError when a denominator vanishes modulo the prime.
        """
        src = self.ring.field
        ring = self.ring.with_field(field)
        return Polynomial(ring, {m: src.lift(c) for m, c in self.terms.items()})

    # -- single-divisor division ---------------------------------------
    def divmod(self, divisor: "Polynomial"):
        """Lex division by one polynomial: returns (quotient, remainder)."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.ring.field
        lm, lc = divisor.leading_term()
        inv = f.inv(lc)
        rem = dict(self.terms)
        quo = {}
        out = {}
        while rem:
            m = max(rem)
            c = rem.pop(m)
            if all(a >= b for a, b in zip(m, lm)):
                s = tuple(a - b for a, b in zip(m, lm))
                q = f.mul(c, inv)
                quo[s] = q
                for dm, dc in divisor.terms.items():
                    if dm == lm:
                        continue
                    t = tuple(a + b for a, b in zip(dm, s))
                    v = f.sub(rem.get(t, f.zero), f.mul(q, dc))
                    if v:
                        rem[t] = v
                    else:
                        rem.pop(t, None)
            else:
                out[m] = c
        return Polynomial(self.ring, quo, _clean=True), Polynomial(self.ring, out, _clean=True)

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    # -- printing ------------------------------------------------------
    def __str__(self):
        from .parsing import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, {self.ring})"


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def differentiate(p: Polynomial, var) -> Polynomial:
    return p.diff(var)


def as_polys(ring: PolynomialRing, items: Iterable) -> list:
    return [ring(s) if isinstance(s, str) else s for s in items]
