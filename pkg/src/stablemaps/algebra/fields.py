"""Exact coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

# Default window for screening primes; overridable through STABLEMAPS_PRIME_WINDOW="lo,hi".
PRIME_WINDOW = (1 << 30, 1 << 31)
CHARACTERISTIC_FLOOR = 1 << 30

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_window() -> tuple[int, int]:
    raw = os.environ.get("STABLEMAPS_PRIME_WINDOW")
    if not raw:
        return PRIME_WINDOW
    lo, hi = (int(s) for s in raw.split(","))
    if not 2 < lo < hi:
        raise ValueError(f"bad STABLEMAPS_PRIME_WINDOW {raw!r}")
    return lo, hi


def random_prime(rng: random.Random, window: Optional[tuple[int, int]] = None) -> int:
    lo, hi = window or prime_window()
    while True:
        n = rng.randrange(lo, hi) | 1
        if n < hi and is_prime(n):
            return n


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: ``rationals`` or ``prime_field`` with a given prime.

    Elements of the rationals are :class:`fractions.Fraction`; elements of
    F_p are plain ints in ``range(p)``.
    """

    kind: str = "rationals"
    prime: Optional[int] = None
    floor: int = field(default=CHARACTERISTIC_FLOOR, compare=False, repr=False)

    def __post_init__(self):
        if self.kind == "rationals":
            if self.prime is not None:
                raise ValueError("rationals take no prime")
        elif self.kind == "prime_field":
            if self.prime is None or not is_prime(self.prime):
                raise ValueError(f"{self.prime!r} is not prime")
            if self.prime <= self.floor:
                raise ValueError(f"prime {self.prime} is below the characteristic floor {self.floor}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @classmethod
    def fp(cls, prime: int, floor: int = CHARACTERISTIC_FLOOR) -> "FieldSpec":
        return cls("prime_field", prime, floor)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime_field"

    @property
    def characteristic(self) -> int:
        return self.prime or 0

    @property
    def zero(self):
        return 0 if self.prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.prime else Fraction(1)

    def __call__(self, value):
        """Coerce an int, Fraction or decimal string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        p = self.prime
        if p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.prime:
            return pow(a, -1, self.prime)
        return 1 / a

    def neg(self, a):
        return (-a) % self.prime if self.prime else -a

    def add(self, a, b):
        return (a + b) % self.prime if self.prime else a + b

    def sub(self, a, b):
        return (a - b) % self.prime if self.prime else a - b

    def mul(self, a, b):
        return a * b % self.prime if self.prime else a * b

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def random_element(self, rng: random.Random, bound: int = 1000):
        """Uniform element of F_p, or an integer in [-bound, bound] over Q."""
        if self.prime:
            return rng.randrange(self.prime)
        return Fraction(rng.randint(-bound, bound))

    def random_nonzero(self, rng: random.Random, bound: int = 1000):
        while True:
            c = self.random_element(rng, bound)
            if c:
                return c

    def lift(self, a) -> Fraction:
        """Integer (or rational) representative of a field element."""
        return Fraction(a)

    def __str__(self):
        return f"GF({self.prime})" if self.prime else "QQ"


QQ = FieldSpec.rationals()
