"""Command-line front end.

Exit status: 0 success or GENERIC, 1 NOT_MAXIMAL (or a count below the
maximum), 2 INDETERMINATE or degenerate input, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import secrets
import sys
from dataclasses import dataclass
from typing import Optional

from .algebra.fields import FieldSpec, random_prime
from .algebra.parsing import PolynomialSyntaxError
from .algebra.polynomial import PolynomialRing
from .certify import (
    GENERIC,
    NOT_MAXIMAL,
    CertifyConfig,
    SearchConfig,
    SearchExhaustedError,
    certify,
    search_generic,
)
from .groebner import CharacteristicTooSmallError
from .singularity import (
    CuspCurveError,
    DegenerateMappingError,
    MappingPair,
    NodeCurveError,
    cusp_census,
    formulas,
    node_census,
)

EXIT_OK, EXIT_NOT_MAXIMAL, EXIT_INDETERMINATE, EXIT_USAGE = 0, 1, 2, 3
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class MappingParseError(ValueError):
    pass


def parse_mapping(text_f: str, text_g: str, d1: int, d2: int, field: Optional[FieldSpec] = None) -> MappingPair:
    """Parse f and g in x, y and check the degree bounds."""
    ring = PolynomialRing(("x", "y"), field or FieldSpec.rationals())
    parsed = []
    for name, text in (("f", text_f), ("g", text_g)):
        try:
            parsed.append(ring(text))
        except PolynomialSyntaxError as exc:
            raise MappingParseError(f"{name}: {exc}") from exc
    f, g = parsed
    if not d1 >= d2 >= 1:
        raise MappingParseError(f"need d1 >= d2 >= 1, got ({d1}, {d2})")
    if f.total_degree() > d1:
        raise MappingParseError(f"deg f = {f.total_degree()} > d1 = {d1}")
    if g.total_degree() > d2:
        raise MappingParseError(f"deg g = {g.total_degree()} > d2 = {d2}")
    return MappingPair(f, g, d1, d2)


@dataclass
class CliConfig:
    command: str
    d1: int
    d2: int
    field: str = "fp"
    prime: Optional[int] = None
    seed: object = DEFAULT_SEED
    retries: int = 5
    budget: int = 50
    prime_count: int = 2
    confirm_exact: bool = False
    json: bool = False
    f: Optional[str] = None
    g: Optional[str] = None
    input: Optional[str] = None

    def validate(self):
        if self.prime is not None and self.field != "fp":
            raise UsageError("--prime is only meaningful with --field fp")
        if not self.d1 >= self.d2 >= 1:
            raise UsageError("need d1 >= d2 >= 1")

    def field_spec(self) -> Optional[FieldSpec]:
        if self.field == "q":
            return FieldSpec.rationals()
        if self.prime is not None:
            return FieldSpec.fp(self.prime)
        return None

    def mapping(self) -> MappingPair:
        f, g = self.f, self.g
        if self.input:
            with open(self.input) as fh:
                lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
            if len(lines) != 2:
                raise UsageError(f"{self.input}: expected two lines (f and g)")
            f, g = lines
        if f is None or g is None:
            raise UsageError("a mapping needs -f and -g (or --input)")
        return parse_mapping(f, g, self.d1, self.d2)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablemaps", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("formulas", "cusps", "nodes", "certify", "search"):
        p = sub.add_parser(name)
        p.add_argument("--d1", type=int, required=True)
        p.add_argument("--d2", type=int, required=True)
        p.add_argument("--json", action="store_true", help="emit JSON")
        if name == "formulas":
            continue
        p.add_argument("--field", choices=("q", "fp"), default="fp")
        p.add_argument("--prime", type=int)
        p.add_argument("--seed", default=str(DEFAULT_SEED), help="integer, or 'random'")
        p.add_argument("--retries", type=int, default=5)
        if name in ("certify", "search"):
            p.add_argument("--prime-count", type=int, default=2)
        if name == "certify":
            p.add_argument("--confirm-exact", action="store_true")
        if name == "search":
            p.add_argument("--budget", type=int, default=50)
        else:
            p.add_argument("-f")
            p.add_argument("-g")
            p.add_argument("--input", help="file with f and g on two lines")
    return parser


def config_from_args(argv) -> CliConfig:
    ns = build_parser().parse_args(argv)
    seed = getattr(ns, "seed", str(DEFAULT_SEED))
    if seed == "random":
        seed = secrets.randbits(32)
    else:
        try:
            seed = int(seed)
        except ValueError:
            raise UsageError(f"--seed must be an integer or 'random', got {seed!r}") from None
    cfg = CliConfig(
        command=ns.command,
        d1=ns.d1,
        d2=ns.d2,
        field=getattr(ns, "field", "fp"),
        prime=getattr(ns, "prime", None),
        seed=seed,
        retries=getattr(ns, "retries", 5),
        budget=getattr(ns, "budget", 50),
        prime_count=getattr(ns, "prime_count", 2),
        confirm_exact=getattr(ns, "confirm_exact", False),
        json=ns.json,
        f=getattr(ns, "f", None),
        g=getattr(ns, "g", None),
        input=getattr(ns, "input", None),
    )
    logging.basicConfig(level=logging.WARNING - 10 * min(ns.verbose, 2), format="%(name)s: %(message)s")
    cfg.validate()
    return cfg


def _emit(cfg: CliConfig, out, payload: dict, text: str):
    if cfg.json:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(text + "\n")


def _count_field(cfg: CliConfig) -> FieldSpec:
    field = cfg.field_spec()
    if field is not None:
        return field
    return FieldSpec.fp(random_prime(random.Random(f"{cfg.seed}:prime:0")))


_VERDICT_EXIT = {GENERIC: EXIT_OK, NOT_MAXIMAL: EXIT_NOT_MAXIMAL}


def run(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    bounds = formulas(cfg.d1, cfg.d2)
    if cfg.command == "formulas":
        payload = {k: str(getattr(bounds, k)) for k in ("d1", "d2", "R", "D", "c_max", "n_max")}
        payload["certifiable"] = bounds.certifiable
        text = (f"c({cfg.d1},{cfg.d2}) = {bounds.c_max}\nn({cfg.d1},{cfg.d2}) = {bounds.n_max}\n"
                f"R = {bounds.R}\nD = {bounds.D}")
        _emit(cfg, out, payload, text)
        return EXIT_OK

    if cfg.command in ("cusps", "nodes"):
        field = _count_field(cfg)
        F = cfg.mapping().over(field)
        if cfg.command == "cusps":
            census = cusp_census(F, cfg.retries, cfg.seed)
            total = census.first.total_multiplicity
            maximum = bounds.c_max
            label = "total multiplicity"
        else:
            census = node_census(F, cfg.retries, cfg.seed)
            total = census.first.ordered_pair_multiplicity
            maximum = bounds.n_max
            label = "ordered-pair multiplicity"
        first = census.first.distinct
        best = census.distinct
        total_s = "INFINITE" if total == float("inf") else str(total)
        payload = {
            "command": cfg.command,
            "field": str(field),
            "distinct": str(first),
            "distinct_max_over_retries": str(best),
            "total": total_s,
            "maximum": str(maximum),
            "attempts": [a.as_dict() for a in census.attempts],
        }
        text = (f"{cfg.command} of {F} over {field}\n"
                f"distinct: {first}\n"
                f"distinct (max over {len(census.attempts)} randomizations): {best}\n"
                f"{label}: {total_s}\n"
                f"maximum for ({cfg.d1},{cfg.d2}): {maximum}")
        _emit(cfg, out, payload, text)
        return EXIT_OK if best == maximum else EXIT_NOT_MAXIMAL

    if cfg.command == "certify":
        F = cfg.mapping()
        ccfg = CertifyConfig(cfg.field_spec(), cfg.prime_count, cfg.seed, cfg.retries, cfg.confirm_exact)
        cert = certify(F, ccfg)
        _emit(cfg, out, cert.as_dict(), _describe(cert))
        return _VERDICT_EXIT.get(cert.verdict, EXIT_INDETERMINATE)

    if cfg.command == "search":
        scfg = SearchConfig(cfg.d1, cfg.d2, cfg.seed, cfg.budget, cfg.field_spec(), cfg.prime_count, cfg.retries)
        F, cert = search_generic(scfg)
        _emit(cfg, out, cert.as_dict(), f"found f = {F.f}\n      g = {F.g}\n" + _describe(cert))
        return EXIT_OK
    raise UsageError(f"unknown command {cfg.command}")


def _describe(cert) -> str:
    lines = [
        f"mapping: ({cert.mapping.f}, {cert.mapping.g})  type ({cert.d1},{cert.d2})",
        f"cusps: {cert.c_found} of {cert.c_max}",
        f"nodes: {cert.n_found} of {cert.n_max}",
        f"verdict: {cert.verdict}" + (" (exact over QQ)" if cert.exact_mode else " (modular screening)"),
    ]
    for rec in cert.evidence:
        lines.append(f"  {rec.field}: {rec.status} c={rec.c_found} n={rec.n_found}"
                     + (f" [{rec.note}]" if rec.note else ""))
    if cert.note:
        lines.append(f"note: {cert.note}")
    return "\n".join(lines)


def main(argv=None) -> int:
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
        return run(cfg)
    except (DegenerateMappingError, CuspCurveError, NodeCurveError, CharacteristicTooSmallError,
            SearchExhaustedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
