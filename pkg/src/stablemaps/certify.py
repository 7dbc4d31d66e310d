"""Genericity certificates and the probabilistic search for generic maps.

A map of bidegree (d1, d2) with d1*d2 > 2 is certified generic when its
counts of (generalized) cusps and nodes reach the closed-form maxima from
:func:`stablemaps.singularity.formulas`. Counts over F_p are a screening
device: a verdict from primes alone needs two primes agreeing on the maxima.
"""

from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, field
from typing import Optional

from .algebra.fields import FieldSpec, random_prime
from .algebra.polynomial import PolynomialRing
from .algebra.transforms import random_polynomial
from .groebner import INFINITE
from .singularity import (
    CuspCurveError,
    DegenerateMappingError,
    MappingPair,
    NodeCurveError,
    cusp_census,
    formulas,
    infinity_checks,
    jacobian,
    node_census,
)

log = logging.getLogger(__name__)

GENERIC = "GENERIC"
NOT_MAXIMAL = "NOT_MAXIMAL"
INDETERMINATE = "INDETERMINATE"


class SearchExhaustedError(RuntimeError):
    """No generic map among the sampled candidates."""


@dataclass(frozen=True)
class CertifyConfig:
    """How to certify.

    ``field`` selects the mode: rationals for an exact run, a prime field to
    screen at that prime plus ``prime_count - 1`` seeded primes, or None to
    screen at ``prime_count`` seeded primes. With two or more primes a
    modular GENERIC needs two of them to reach the maxima. ``confirm_exact`` adds a run
    over Q after screening.
    """

    field: Optional[FieldSpec] = None
    prime_count: int = 2
    seed: object = 0
    retries: int = 5
    confirm_exact: bool = False
    bound: int = 1000
    explicit_primes: tuple = ()

    def __post_init__(self):
        if self.prime_count < 1:
            raise ValueError("prime_count must be at least 1")
        if self.retries < 0:
            raise ValueError("retries must be non-negative")

    def primes(self) -> list:
        if self.explicit_primes:
            return list(self.explicit_primes)
        if self.field is not None and not self.field.is_prime_field:
            return []
        primes = [self.field.prime] if self.field is not None else []
        k = 0
        while len(primes) < self.prime_count:
            p = random_prime(random.Random(f"{self.seed}:prime:{k}"))
            k += 1
            if p not in primes:
                primes.append(p)
        return primes


@dataclass
class EvidenceRecord:
    field: FieldSpec
    status: str  # "ok", "indeterminate", "skipped"
    c_found: Optional[int] = None
    n_found: Optional[int] = None
    cusp_total: object = None
    node_total: object = None
    cusp_attempts: list = field(default_factory=list)
    node_attempts: list = field(default_factory=list)
    infinity: Optional[dict] = None
    note: str = ""

    @property
    def exact(self) -> bool:
        return not self.field.is_prime_field

    def hits(self, bounds) -> bool:
        return self.status == "ok" and self.c_found == bounds.c_max and self.n_found == bounds.n_max

    def as_dict(self) -> dict:
        return {
            "field": str(self.field),
            "prime": str(self.field.prime) if self.field.prime else None,
            "status": self.status,
            "c_found": _s(self.c_found),
            "n_found": _s(self.n_found),
            "cusp_total": _s(self.cusp_total),
            "node_total": _s(self.node_total),
            "cusp_attempts": self.cusp_attempts,
            "node_attempts": self.node_attempts,
            "infinity": self.infinity,
            "note": self.note,
        }


def _s(v):
    if v is None:
        return None
    if v == float("inf"):
        return "INFINITE"
    return str(v)


@dataclass
class GenericityCertificate:
    mapping: MappingPair
    d1: int
    d2: int
    c_found: Optional[int]
    n_found: Optional[int]
    c_max: int
    n_max: int
    verdict: str
    evidence: list
    exact_mode: bool
    seed: object = 0
    retries: int = 5
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "f": str(self.mapping.f),
            "g": str(self.mapping.g),
            "d1": str(self.d1),
            "d2": str(self.d2),
            "c_found": _s(self.c_found),
            "n_found": _s(self.n_found),
            "c_max": str(self.c_max),
            "n_max": str(self.n_max),
            "verdict": self.verdict,
            "exact_mode": self.exact_mode,
            "seed": str(self.seed),
            "retries": str(self.retries),
            "note": self.note,
            "evidence": [e.as_dict() for e in self.evidence],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, **kw)

    def config(self) -> CertifyConfig:
        """A config that replays exactly the recorded fields."""
        primes = [e.field.prime for e in self.evidence if e.field.is_prime_field]
        exact = any(not e.field.is_prime_field for e in self.evidence)
        if primes:
            return CertifyConfig(FieldSpec.fp(primes[0]), len(primes), self.seed, self.retries,
                                 confirm_exact=exact, explicit_primes=tuple(primes))
        return CertifyConfig(FieldSpec.rationals(), seed=self.seed, retries=self.retries)


CERTIFICATE_KEYS = frozenset(
    "f g d1 d2 c_found n_found c_max n_max verdict exact_mode seed retries note evidence".split()
)


def evaluate(F: MappingPair, field: FieldSpec, seed=0, retries: int = 5, bound: int = 1000) -> EvidenceRecord:
    """Cusp and node counts of F over one field, with retried randomizations."""
    try:
        G = F.over(field)
    except ZeroDivisionError as exc:
        return EvidenceRecord(field, "skipped", note=f"reduction undefined: {exc}")
    rec = EvidenceRecord(field, "ok")
    if not jacobian(G):
        rec.status = "indeterminate"
        rec.note = "J(F) vanishes identically after reduction"
        return rec
    rec.infinity = infinity_checks(G).as_dict()
    try:
        cc = cusp_census(G, retries, seed, bound)
        rec.c_found = cc.distinct
        rec.cusp_total = cc.first.total_multiplicity
        rec.cusp_attempts = [a.as_dict() for a in cc.attempts]
        if rec.cusp_total == INFINITE:
            raise CuspCurveError("cusp ideal is not zero-dimensional")
        nc = node_census(G, retries, seed, bound)
        rec.n_found = nc.distinct
        rec.node_total = nc.first.ordered_pair_multiplicity
        rec.node_attempts = [a.as_dict() for a in nc.attempts]
    except (CuspCurveError, NodeCurveError) as exc:
        rec.status = "indeterminate"
        rec.note = str(exc)
    return rec


@dataclass
class ScreenResult:
    per_prime: dict  # prime -> EvidenceRecord
    skipped: list
    c_max_found: Optional[int]
    n_max_found: Optional[int]
    disagreement: bool

    @property
    def records(self) -> list:
        return list(self.per_prime.values())


def multi_prime_screen(F: MappingPair, primes, seed=0, retries: int = 5, bound: int = 1000) -> ScreenResult:
    """Counts at each prime; the consolidated count is the maximum over primes."""
    primes = list(primes)
    if not primes:
        raise ValueError("at least one prime is required")
    per, skipped = {}, []
    for p in primes:
        rec = evaluate(F, FieldSpec.fp(p), seed, retries, bound)
        if rec.status == "skipped":
            skipped.append(p)
            log.info("prime %d skipped: %s", p, rec.note)
        per[p] = rec
    ok = [r for r in per.values() if r.status == "ok"]
    c = max((r.c_found for r in ok), default=None)
    n = max((r.n_found for r in ok), default=None)
    disagree = len({(r.c_found, r.n_found) for r in ok}) > 1
    if disagree:
        log.warning("primes disagree on counts for %s: %s", F,
                    {p: (r.c_found, r.n_found) for p, r in per.items() if r.status == "ok"})
    return ScreenResult(per, skipped, c, n, disagree)


def certify(F: MappingPair, config: CertifyConfig = CertifyConfig()) -> GenericityCertificate:
    """Decide whether F reaches the maximal cusp and node counts."""
    if not jacobian(F):
        raise DegenerateMappingError(f"J(F) vanishes identically for {F}")
    bounds = formulas(F.d1, F.d2)

    def cert(verdict, records, c, n, exact, note=""):
        return GenericityCertificate(F, F.d1, F.d2, c, n, bounds.c_max, bounds.n_max, verdict,
                                     records, exact, config.seed, config.retries, note)

    if not bounds.certifiable:
        return cert(INDETERMINATE, [], None, None, False, "d1*d2 <= 2: outside the certifiable range")

    records = []
    primes = config.primes()
    if primes:
        records += multi_prime_screen(F, primes, config.seed, config.retries, config.bound).records
    if not primes or config.confirm_exact:
        records.append(evaluate(F, FieldSpec.rationals(), config.seed, config.retries, config.bound))

    ok = [r for r in records if r.status == "ok"]
    exact_ok = [r for r in ok if r.exact]
    # the exact record is authoritative when present
    basis = exact_ok or ok
    if not basis:
        notes = sorted({r.note for r in records if r.note})
        return cert(INDETERMINATE, records, None, None, False, "; ".join(notes) or "no usable evidence record")
    c = max(r.c_found for r in basis)
    n = max(r.n_found for r in basis)
    exact = bool(exact_ok)
    if c > bounds.c_max or n > bounds.n_max:
        return cert(INDETERMINATE, records, c, n, exact, "counts exceed the maxima; hypotheses fail")
    if exact_ok:
        hit = any(r.hits(bounds) for r in exact_ok)
    else:
        # two agreeing primes, unless the caller asked for a single one
        hit = sum(r.hits(bounds) for r in ok) >= min(2, len(primes))
    if hit:
        note = "" if exact or len(primes) > 1 else "single-prime screening"
        return cert(GENERIC, records, c, n, exact, note)
    if any(r.status == "indeterminate" for r in records if r.exact == exact):
        return cert(INDETERMINATE, records, c, n, exact, "a count ideal is not zero-dimensional")
    if c == bounds.c_max and n == bounds.n_max:
        return cert(INDETERMINATE, records, c, n, exact, "maxima reached at fewer than two primes")
    return cert(NOT_MAXIMAL, records, c, n, exact)


def replay(cert: GenericityCertificate) -> GenericityCertificate:
    return certify(cert.mapping, cert.config())


@dataclass(frozen=True)
class SearchConfig:
    d1: int
    d2: int
    seed: object = 0
    budget: int = 50
    field: Optional[FieldSpec] = None
    prime_count: int = 2
    retries: int = 5
    bound: int = 1000

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.prime_count < 1:
            raise ValueError("prime_count must be at least 1")
        if not self.d1 >= self.d2 >= 1:
            raise ValueError("need d1 >= d2 >= 1")
        if self.d1 * self.d2 <= 2:
            raise ValueError("d1*d2 must exceed 2")


def sample_mapping(cfg: SearchConfig, index: int) -> MappingPair:
    """Random candidate of exact bidegree (d1, d2), deterministic in (seed, index).

    Over Q coefficients are integers in [-bound, bound]; in prime-field mode
    they are uniform residues of the first screening prime, kept as integers.
    """
    rng = random.Random(f"{cfg.seed}:search:{index}")
    if cfg.field is not None and not cfg.field.is_prime_field:
        ring = PolynomialRing(("x", "y"))
        return MappingPair(random_polynomial(ring, cfg.d1, rng, cfg.bound),
                           random_polynomial(ring, cfg.d2, rng, cfg.bound), cfg.d1, cfg.d2)
    p = cfg.field.prime if cfg.field is not None else _screen_config(cfg).primes()[0]
    ring_p = PolynomialRing(("x", "y"), FieldSpec.fp(p))
    ring = PolynomialRing(("x", "y"))
    f = random_polynomial(ring_p, cfg.d1, rng).change_field(ring.field)
    g = random_polynomial(ring_p, cfg.d2, rng).change_field(ring.field)
    return MappingPair(f, g, cfg.d1, cfg.d2)


def _screen_config(cfg: SearchConfig) -> CertifyConfig:
    return CertifyConfig(cfg.field, cfg.prime_count, cfg.seed, cfg.retries, bound=cfg.bound)


def search_generic(cfg: SearchConfig):
    """First sampled map certified GENERIC, with its certificate."""
    ccfg = _screen_config(cfg)
    for i in range(cfg.budget):
        F = sample_mapping(cfg, i)
        if not jacobian(F):
            continue
        cert = certify(F, ccfg)
        log.info("candidate %d: %s (c=%s, n=%s)", i, cert.verdict, cert.c_found, cert.n_found)
        if cert.verdict == GENERIC:
            return F, cert
    raise SearchExhaustedError(
        f"no generic map of type ({cfg.d1}, {cfg.d2}) among {cfg.budget} candidates")


__all__ = [
    "CERTIFICATE_KEYS",
    "GENERIC",
    "INDETERMINATE",
    "NOT_MAXIMAL",
    "CertifyConfig",
    "EvidenceRecord",
    "GenericityCertificate",
    "ScreenResult",
    "SearchConfig",
    "SearchExhaustedError",
    "certify",
    "evaluate",
    "multi_prime_screen",
    "replay",
    "sample_mapping",
    "search_generic",
]
