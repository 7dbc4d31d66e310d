"""Monomial orders and the packed-integer monomial encoding used by the engine.

A monomial is packed into one Python int with a 16-bit field per variable
(plus a total-degree field for graded orders). Multiplication is integer
addition, and divisibility is a single subtraction and mask test. Each
packed monomial ``m`` also has an order key: an int whose natural order is
the monomial order, and which is additive as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra.polynomial import PolynomialRing

_W = 16
_FIELD = (1 << _W) - 1
_MAX_EXP = (1 << (_W - 1)) - 1


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``grevlex`` with variables listed from largest to smallest.

    An elimination order for lex puts the eliminated variables first.
    """

    kind: str
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unsupported monomial order {self.kind!r}")

    @classmethod
    def lex(cls, variables) -> "MonomialOrder":
        return cls("lex", variables)

    @classmethod
    def grevlex(cls, variables) -> "MonomialOrder":
        return cls("grevlex", variables)

    @classmethod
    def elimination(cls, ring: PolynomialRing, keep) -> "MonomialOrder":
        keep = set(keep)
        first = [v for v in ring.variables if v not in keep]
        last = [v for v in ring.variables if v in keep]
        return cls("lex", first + last)

    def check(self, ring: PolynomialRing):
        if sorted(self.variables) != sorted(ring.variables):
            raise ValueError(f"order on {self.variables} does not match ring {ring.variables}")

    def __str__(self):
        return f"{self.kind}({' > '.join(self.variables)})"


class Packer:
    """Encode ring-ordered exponent tuples as packed ints for a given order."""

    def __init__(self, ring: PolynomialRing, order: MonomialOrder):
        order.check(ring)
        n = ring.nvars
        self.n = n
        self.graded = order.kind == "grevlex"
        perm = [ring.index(v) for v in order.variables]
        # shift for each ring variable index
        shifts = [0] * n
        if self.graded:
            # least significant field holds the largest variable: a larger
            # exponent in a late variable makes the key smaller.
            for pos, i in enumerate(perm):
                shifts[i] = _W * pos
            self.deg_shift = _W * n
            self.rest_mask = (1 << (_W * n)) - 1
            nfields = n + 1
        else:
            for pos, i in enumerate(perm):
                shifts[i] = _W * (n - 1 - pos)
            self.deg_shift = None
            self.rest_mask = None
            nfields = n
        self.shifts = shifts
        self.guard = sum(1 << (_W * k + _W - 1) for k in range(nfields))
        self.units = [self.pack(tuple(int(j == i) for j in range(n))) for i in range(n)]

    def pack(self, exps) -> int:
        m = 0
        for e, s in zip(exps, self.shifts):
            if e > _MAX_EXP:
                raise OverflowError(f"exponent {e} exceeds {_MAX_EXP}")
            m += e << s
        if self.graded:
            m += sum(exps) << self.deg_shift
        return m

    def unpack(self, m: int) -> tuple:
        return tuple((m >> s) & _FIELD for s in self.shifts)

    def key(self, m: int) -> int:
        if self.graded:
            return m - 2 * (m & self.rest_mask)
        return m

    def key_to_m(self, k: int) -> int:
        if self.graded:
            deg = (k + (1 << self.deg_shift) - 1) >> self.deg_shift
            return (deg << (self.deg_shift + 1)) - k
        return k

    def divides(self, a: int, b: int) -> bool:
        return not (b - a) & self.guard

    def lcm(self, a: int, b: int) -> int:
        m = 0
        deg = 0
        for s in self.shifts:
            e = max((a >> s) & _FIELD, (b >> s) & _FIELD)
            deg += e
            m += e << s
        if self.graded:
            m += deg << self.deg_shift
        return m

    def degree(self, m: int) -> int:
        if self.graded:
            return m >> self.deg_shift
        return sum((m >> s) & _FIELD for s in self.shifts)

    def support(self, m: int) -> tuple:
        """Ring indices of variables with nonzero exponent."""
        return tuple(i for i, s in enumerate(self.shifts) if (m >> s) & _FIELD)
