"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Polynomials are converted to lists of ``(key, coeff)`` pairs sorted by
decreasing key, where keys come from :class:`Packer`. Reduction runs on a
dict plus a max-heap of keys, which keeps the hot loop to integer additions
and dictionary lookups.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Sequence

from ..algebra.polynomial import Polynomial, PolynomialRing, RingMismatchError
from .orders import MonomialOrder, Packer

log = logging.getLogger(__name__)


class _Entry:
    __slots__ = ("lm", "key", "tail", "deg")

    def __init__(self, lm, key, tail, deg):
        self.lm = lm
        self.key = key
        self.tail = tail
        self.deg = deg


class Engine:
    """Conversion and reduction machinery for one (ring, order) pair."""

    def __init__(self, ring: PolynomialRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.field = ring.field
        self.packer = Packer(ring, order)

    # -- conversion ----------------------------------------------------
    def to_terms(self, p: Polynomial) -> dict:
        if p.ring != self.ring:
            raise RingMismatchError(f"{p.ring} vs {self.ring}")
        pk = self.packer
        return {pk.key(pk.pack(m)): c for m, c in p.terms.items()}

    def from_terms(self, terms) -> Polynomial:
        pk = self.packer
        return Polynomial(
            self.ring, {pk.unpack(pk.key_to_m(k)): c for k, c in terms}, _clean=True
        )

    def make_entry(self, terms: list) -> _Entry:
        """Entry from a remainder list (descending keys), scaled to be monic."""
        f = self.field
        k0, c0 = terms[0]
        if c0 != 1:
            inv = f.inv(c0)
            terms = [(k, f.mul(c, inv)) for k, c in terms]
        lm = self.packer.key_to_m(k0)
        return _Entry(lm, k0, terms[1:], self.packer.degree(lm))

    def entry_poly(self, e: _Entry) -> Polynomial:
        return self.from_terms([(e.key, self.field.one)] + e.tail)

    # -- reduction -----------------------------------------------------
    def reduce(self, h: dict, reducers: Sequence[_Entry], cache=None) -> list:
        """Full reduction of ``h`` (key -> coeff, consumed) by ``reducers``.

        Returns the remainder as a list of (key, coeff) in decreasing key order.
        ``cache`` is a pair of dicts: packed monomial -> reducer (always valid,
        since every entry is an ideal member) and the set of monomials found
        irreducible (valid only until the reducer set changes).
        """
        hits, misses = cache if cache is not None else ({}, set())
        p = self.field.prime
        pk = self.packer
        guard = pk.guard
        graded = pk.graded
        if graded:
            dshift = pk.deg_shift
            dround = (1 << dshift) - 1
        heap = [-k for k in h]
        heapify(heap)
        out = []
        while heap:
            k = -heappop(heap)
            c = h.pop(k)
            if p:
                # coefficients accumulate unreduced; reduce once per popped term
                c %= p
            if not c:
                continue
            if graded:
                m = (((k + dround) >> dshift) << (dshift + 1)) - k
            else:
                m = k
            r = hits.get(m)
            if r is None:
                if m not in misses:
                    for g in reducers:
                        if not (m - g.lm) & guard:
                            r = g
                            hits[m] = g
                            break
                if r is None:
                    misses.add(m)
                    out.append((k, c))
                    continue
            shift = k - r.key
            for gk, gc in r.tail:
                nk = gk + shift
                v = h.get(nk)
                if v is None:
                    h[nk] = -c * gc
                    heappush(heap, -nk)
                else:
                    h[nk] = v - c * gc
        return out

    def spoly(self, a: _Entry, b: _Entry, lcm_key: int) -> dict:
        p = self.field.prime
        sa = lcm_key - a.key
        sb = lcm_key - b.key
        h = {k + sa: c for k, c in a.tail}
        for k, c in b.tail:
            nk = k + sb
            v = h.get(nk, 0) - c
            h[nk] = v % p if p else v
        return h


@dataclass
class BuchbergerStats:
    pairs_considered: int = 0
    zero_reductions: int = 0
    basis_growth: int = 0
    extra: dict = field(default_factory=dict)


def _buchberger(engine: Engine, polys: Sequence[Polynomial], stats: BuchbergerStats) -> list:
    pk = engine.packer
    divides = pk.divides
    lcm = pk.lcm
    entries: list = []
    active: list = []  # indices into entries
    pairs: list = []  # (deg, lcm_key, i, j, lcm_m)
    cache = ({}, set())

    def add(terms):
        nonlocal active, pairs
        e = engine.make_entry(terms)
        hi = len(entries)
        entries.append(e)
        stats.basis_growth += 1
        # new pairs, Gebauer-Moeller criterion on the candidates
        cand = []
        for gi in active:
            g = entries[gi]
            l = lcm(e.lm, g.lm)
            cand.append((gi, l, l == e.lm + g.lm))
        kept = []
        for idx, (gi, l, disjoint) in enumerate(cand):
            if disjoint:
                kept.append((gi, l, True))
                continue
            redundant = False
            for gj, l2, _ in cand[idx + 1:]:
                if divides(l2, l):
                    redundant = True
                    break
            if not redundant:
                for gj, l2, _ in kept:
                    if divides(l2, l):
                        redundant = True
                        break
            if not redundant:
                kept.append((gi, l, False))
        new_pairs = [(pk.degree(l), pk.key(l), gi, hi, l) for gi, l, disjoint in kept if not disjoint]
        # prune old pairs (chain criterion through the new element)
        survivors = []
        for pr in pairs:
            _, _, i, j, l = pr
            if divides(e.lm, l) and lcm(entries[i].lm, e.lm) != l and lcm(entries[j].lm, e.lm) != l:
                continue
            survivors.append(pr)
        pairs = survivors + new_pairs
        active = [gi for gi in active if not divides(e.lm, entries[gi].lm)] + [hi]
        # a new leading monomial invalidates the irreducible set
        cache[1].clear()

    def reducers():
        return [entries[i] for i in active]

    ordered = sorted(
        (engine.to_terms(p) for p in polys if p),
        key=lambda t: max(t),
    )
    for h in ordered:
        rem = engine.reduce(h, reducers(), cache)
        if rem:
            add(rem)

    while pairs:
        best = min(range(len(pairs)), key=lambda t: pairs[t][:2])
        deg, lkey, i, j, l = pairs.pop(best)
        stats.pairs_considered += 1
        h = engine.spoly(entries[i], entries[j], lkey)
        rem = engine.reduce(h, reducers(), cache)
        if rem:
            add(rem)
        else:
            stats.zero_reductions += 1

    # inter-reduce the (already minimal) active set
    basis = [entries[i] for i in active]
    final = []
    for idx, e in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        h = dict(e.tail)
        rest = engine.reduce(h, others)
        final.append(_Entry(e.lm, e.key, rest, e.deg))
    final.sort(key=lambda e: e.key)
    return final
