"""Ideals, reduced Groebner bases and what can be read off from them."""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from ..algebra.polynomial import Polynomial, PolynomialRing, RingMismatchError
from .engine import BuchbergerStats, Engine, _buchberger
from .orders import MonomialOrder

log = logging.getLogger(__name__)

INFINITE = math.inf


@dataclass(frozen=True)
class Ideal:
    """An ideal given by generators. The zero ideal is ``<0>`` with ``is_zero`` set."""

    ring: PolynomialRing
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != self.ring:
                raise RingMismatchError(f"generator {g!r} is not in {self.ring}")
        nonzero = tuple(g for g in gens if g)
        object.__setattr__(self, "generators", nonzero or (self.ring.zero,))

    @classmethod
    def of(cls, *gens: Polynomial) -> "Ideal":
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        return cls(gens[0].ring, gens)

    @classmethod
    def zero(cls, ring: PolynomialRing) -> "Ideal":
        return cls(ring, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators[0]

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"


class GroebnerBasis:
    """Reduced, monic Groebner basis of an ideal for a fixed monomial order.

    ``basis`` is sorted by increasing leading monomial.
    """

    def __init__(self, ring: PolynomialRing, order: MonomialOrder, entries, engine: Engine,
                 stats: Optional[BuchbergerStats] = None):
        self.ring = ring
        self.order = order
        self._engine = engine
        self._entries = list(entries)
        self.basis = tuple(engine.entry_poly(e) for e in self._entries)
        self.stats = stats

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return f"GroebnerBasis({self.order}, [{', '.join(map(str, self.basis))}])"

    @property
    def leading_monomials(self) -> list:
        pk = self._engine.packer
        return [pk.unpack(e.lm) for e in self._entries]

    def leading_term(self, p: Polynomial):
        """Leading (exponents, coeff) of ``p`` in this basis' order."""
        terms = self._engine.to_terms(p)
        k = max(terms)
        pk = self._engine.packer
        return pk.unpack(pk.key_to_m(k)), terms[k]

    @property
    def is_unit(self) -> bool:
        return len(self._entries) == 1 and self._entries[0].lm == 0

    def reduce(self, p: Polynomial) -> Polynomial:
        eng = self._engine
        return eng.from_terms(eng.reduce(eng.to_terms(p), self._entries))

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def is_groebner(self) -> bool:
        """Check that every S-polynomial of basis pairs reduces to zero."""
        eng = self._engine
        pk = eng.packer
        es = self._entries
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                l = pk.lcm(es[i].lm, es[j].lm)
                if l == es[i].lm + es[j].lm:
                    continue
                if eng.reduce(eng.spoly(es[i], es[j], pk.key(l)), es):
                    return False
        return True

    def is_reduced(self) -> bool:
        pk = self._engine.packer
        es = self._entries
        for e in es:
            for other in es:
                if other is e:
                    continue
                if pk.divides(other.lm, e.lm):
                    return False
                for k, _ in e.tail:
                    if pk.divides(other.lm, pk.key_to_m(k)):
                        return False
        return True


def _as_polys(I) -> tuple:
    if isinstance(I, Ideal):
        return I.ring, list(I.generators)
    polys = list(I)
    if not polys:
        raise ValueError("empty generator list")
    return polys[0].ring, polys


def buchberger(I: Union[Ideal, Iterable[Polynomial]], order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I``; default order is grevlex on the ring variables."""
    ring, polys = _as_polys(I)
    order = order or MonomialOrder.grevlex(ring.variables)
    engine = Engine(ring, order)
    stats = BuchbergerStats()
    t0 = time.perf_counter()
    entries = _buchberger(engine, polys, stats)
    stats.extra["seconds"] = time.perf_counter() - t0
    log.debug("buchberger %s over %s: %d elements, %s", order, ring.field, len(entries), stats)
    return GroebnerBasis(ring, order, entries, engine, stats)


def normal_form(p: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on division by ``G``; zero iff ``p`` lies in the ideal."""
    if p.ring != G.ring:
        raise RingMismatchError(f"{p.ring} vs {G.ring}")
    return G.reduce(p)


def is_zero_dimensional(G: GroebnerBasis) -> bool:
    """True iff every variable has a pure power among the leading monomials."""
    if G.is_unit:
        return True
    n = G.ring.nvars
    pure = set()
    for m in G.leading_monomials:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == n


def _standard_packed(G: GroebnerBasis) -> list:
    """Packed standard monomials (not divisible by any leading monomial), BFS order."""
    pk = G._engine.packer
    lms = [e.lm for e in G._entries]
    guard = pk.guard

    def standard(m):
        return all((m - l) & guard for l in lms)

    if not standard(0):
        return []
    seen = {0}
    out = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for u in pk.units:
                c = m + u
                if c not in seen:
                    seen.add(c)
                    if standard(c):
                        out.append(c)
                        nxt.append(c)
        frontier = nxt
    return out


def standard_monomials(G: GroebnerBasis) -> list:
    if not is_zero_dimensional(G):
        raise ValueError("infinitely many standard monomials: ideal is not zero-dimensional")
    pk = G._engine.packer
    return [pk.unpack(m) for m in _standard_packed(G)]


def quotient_dimension(G: GroebnerBasis):
    """Vector-space dimension of R/I: an int, or ``INFINITE``."""
    if not is_zero_dimensional(G):
        return INFINITE
    return len(_standard_packed(G))


def multiplication_matrix(G: GroebnerBasis, var) -> tuple:
    """Matrix of multiplication by ``var`` on R/I in the standard-monomial basis.

    Returns ``(basis_keys, columns)`` where ``columns[j]`` is a dict
    row-index -> coefficient giving NF(var * s_j).
    """
    if not is_zero_dimensional(G):
        raise ValueError("multiplication matrix needs a zero-dimensional ideal")
    eng = G._engine
    pk = eng.packer
    std = _standard_packed(G)
    keys = [pk.key(m) for m in std]
    index = {k: i for i, k in enumerate(keys)}
    ukey = pk.key(pk.units[G.ring.index(var)])
    cache = ({}, set())
    cols = []
    for k in keys:
        nk = k + ukey
        if nk in index:
            cols.append({index[nk]: G.ring.field.one})
            continue
        rem = eng.reduce({nk: G.ring.field.one}, G._entries, cache)
        cols.append({index[rk]: c for rk, c in rem})
    return keys, cols


def minimal_polynomial(G: GroebnerBasis, var) -> Polynomial:
    """Monic generator of I ∩ k[var] for a zero-dimensional ideal I.

    It is the minimal polynomial of multiplication by ``var`` applied to the
    class of 1, found by a Krylov sequence and incremental elimination.
    """
    ring = G.ring
    if G.is_unit:
        return ring.one
    f = ring.field
    p = f.prime
    keys, cols = multiplication_matrix(G, var)
    dim = len(keys)
    one_idx = keys.index(G._engine.packer.key(0))
    w = [f.zero] * dim
    w[one_idx] = f.one
    rows = []  # (pivot, vec, comb) with vec[pivot] == 1
    k = 0
    while True:
        r = list(w)
        comb = [f.zero] * (k + 1)
        comb[k] = f.one
        for piv, vec, cmb in rows:
            a = r[piv]
            if a:
                if p:
                    for i, v in enumerate(vec):
                        if v:
                            r[i] = (r[i] - a * v) % p
                    for i, v in enumerate(cmb):
                        if v:
                            comb[i] = (comb[i] - a * v) % p
                else:
                    for i, v in enumerate(vec):
                        if v:
                            r[i] = r[i] - a * v
                    for i, v in enumerate(cmb):
                        if v:
                            comb[i] = comb[i] - a * v
        piv = next((i for i, v in enumerate(r) if v), None)
        if piv is None:
            break
        inv = f.inv(r[piv])
        rows.append((piv, [f.mul(v, inv) for v in r], [f.mul(v, inv) for v in comb]))
        # next Krylov vector: M w
        nw = [f.zero] * dim
        for j, a in enumerate(w):
            if a:
                for i, c in cols[j].items():
                    nw[i] = nw[i] + a * c
        if p:
            nw = [v % p for v in nw]
        w = nw
        k += 1
    x = ring.gen(var)
    out = ring.zero
    for e, c in enumerate(comb):
        if c:
            out = out + (x ** e).scale(c)
    return out


def _univariate_generator(G: GroebnerBasis, var) -> Polynomial:
    i = G.ring.index(var)
    for g in G.basis:
        if all(not e for m in g.terms for j, e in enumerate(m) if j != i):
            return g
    return G.ring.zero


def elimination_ideal(I: Union[Ideal, Iterable[Polynomial]], keep) -> Ideal:
    """Generators of I ∩ k[keep], read off a lex basis with eliminated variables first."""
    ring, polys = _as_polys(I)
    keep = [keep] if isinstance(keep, str) else list(keep)
    if not set(keep) < set(ring.variables):
        raise ValueError(f"keep={keep} must be a proper subset of {ring.variables}")
    order = MonomialOrder.elimination(ring, keep)
    G = buchberger(polys, order)
    idx = {ring.index(v) for v in keep}
    gens = [g for g in G.basis if all(not e for m in g.terms for j, e in enumerate(m) if j not in idx)]
    return Ideal(ring, tuple(gens))


def eliminant(I: Union[Ideal, Iterable[Polynomial]], var, G: Optional[GroebnerBasis] = None) -> Polynomial:
    """Monic generator of the principal ideal I ∩ k[var] (zero polynomial if trivial).

    Zero-dimensional ideals go through the minimal polynomial of ``var`` on a
    grevlex basis; anything else through a pure lex elimination basis.
    """
    ring, polys = _as_polys(I)
    if G is None:
        G = buchberger(polys)
    if is_zero_dimensional(G):
        return minimal_polynomial(G, var)
    J = elimination_ideal(polys, [var])
    if J.is_zero:
        return ring.zero
    if len(J.generators) != 1:
        raise AssertionError("reduced basis of a univariate ideal has one element")
    return J.generators[0].monic()


__all__ = [
    "INFINITE",
    "GroebnerBasis",
    "Ideal",
    "buchberger",
    "elimination_ideal",
    "eliminant",
    "is_zero_dimensional",
    "minimal_polynomial",
    "multiplication_matrix",
    "normal_form",
    "quotient_dimension",
    "standard_monomials",
]
