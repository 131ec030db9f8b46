"""Command-line interface.

Exit codes: 0 success, 1 mathematical violation found, 2 budget or
incompleteness, 3 usage error.  All big integers are serialized as decimal
strings so JSON consumers never lose precision.  Identical configuration
(including the RNG seed) produces byte-identical output files; when a worker
pool is used, records are sorted canonically before writing.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import arith, ecq, identities, quadform, x16
from .arith import FactorBudget
from .errors import BudgetExceeded, IncompleteFactorization, X16Error

CONFIG_ENV = "X16CLASS_CONFIG"

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


@dataclass
class Config:
    trial_bound: int = 10000
    rho_iterations: int = 500000
    prime_rounds: int = 40
    rng_seed: int = 1
    height_bound: int = 50
    worker_count: int = 1
    output_path: Optional[str] = None
    format: str = "jsonl"

    def __post_init__(self):
        for name in ("trial_bound", "rho_iterations", "prime_rounds", "height_bound", "worker_count"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.format not in ("jsonl", "csv"):
            raise ValueError("format must be jsonl or csv")

    def budget(self) -> FactorBudget:
        return FactorBudget(self.trial_bound, self.rho_iterations, self.prime_rounds, self.rng_seed)


def load_config(path: Optional[str] = None) -> Config:
    """Config from an explicit path, the environment, or defaults."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return Config()
    with open(path) as fh:
        return Config(**json.load(fh))


def _s(x) -> str:
    """Decimal-string serialization for unbounded integers and fractions."""
    if isinstance(x, Fraction):
        return str(x)
    return str(int(x))


class _Writer:
    """JSONL/CSV record writer bound to a path or stdout."""

    def __init__(self, path: Optional[str], fmt: str):
        self.fmt = fmt
        self.rows: list[dict] = []
        self.path = path

    def write(self, row: dict):
        self.rows.append(row)

    def flush(self):
        out = open(self.path, "w") if self.path else sys.stdout
        try:
            if self.fmt == "jsonl":
                for row in self.rows:
                    out.write(json.dumps(row) + "\n")
            else:
                if self.rows:
                    w = csv.DictWriter(out, fieldnames=list(self.rows[0].keys()))
                    w.writeheader()
                    w.writerows(self.rows)
        finally:
            if self.path:
                out.close()


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text}") from exc


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_factor(args, cfg: Config) -> int:
    f = arith.factor(args.n, cfg.budget())
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in f.factors]
    sign = "-" if f.sign < 0 else ""
    body = " * ".join(parts) if parts else "1"
    if not f.complete:
        print(f"{args.n} = {sign}{body} * C where C = {f.cofactor} (incomplete)")
        return EXIT_BUDGET
    print(f"{args.n} = {sign}{body}")
    return EXIT_OK


def _cmd_classgroup(args, cfg: Config) -> int:
    disc = args.disc
    if args.forms:
        cg = quadform.class_group(disc)
        print(f"h({disc}) = {cg.h}")
        print(f"elementary divisors: {cg.elementary_divisors}")
        for f in cg.reduced_forms:
            print(f"  {f}")
    else:
        h = quadform.class_number(disc)
        print(f"h({disc}) = {h}")
        if args.structure:
            cg = quadform.class_group(disc)
            print(f"elementary divisors: {cg.elementary_divisors}")
    return EXIT_OK


def _record_to_row(rec: x16.CensusRecord) -> dict:
    return {
        "t_num": _s(rec.t.numerator),
        "t_den": _s(rec.t.denominator),
        "d": _s(rec.d),
        "disc": _s(rec.disc),
        "h": _s(rec.h),
        "two_rank": rec.two_rank,
        "five_order": rec.five_order,
        "div10": rec.div10,
    }


def _census_worker(t):
    rec = x16.divisibility_check(x16.point_from_t(t, _WORKER_BUDGET), _WORKER_BUDGET)
    return rec


_WORKER_BUDGET = None


def _worker_init(budget):
    global _WORKER_BUDGET
    _WORKER_BUDGET = budget


def _cmd_census(args, cfg: Config) -> int:
    height = args.height or cfg.height_bound
    path = args.jsonl or cfg.output_path
    writer = _Writer(path, cfg.format)
    budget = cfg.budget()
    if cfg.worker_count > 1:
        import multiprocessing as mp

        params = x16.census_parameters(height)
        summary = x16.CensusSummary(height)
        with mp.Pool(cfg.worker_count, _worker_init, (budget,)) as pool:
            recs = []
            for t, result in zip(params, pool.imap(_census_worker, params)):
                recs.append(result)
        for rec in recs:  # params are already canonically ordered
            summary.records += 1
            if rec.d == -15:
                summary.exceptions.append(rec.t)
            elif not rec.div10:
                summary.violations.append(rec.t)
            writer.write(_record_to_row(rec))
    else:
        summary = x16.census(height, lambda rec: writer.write(_record_to_row(rec)), budget)
    writer.write(
        {
            "summary": True,
            "height": height,
            "records": summary.records,
            "exceptions": [str(t) for t in summary.exceptions],
            "violations": [str(t) for t in summary.violations],
            "errors": [[str(t), msg] for t, msg in summary.errors],
        }
    )
    writer.flush()
    print(
        f"census height <= {height}: {summary.records} records, "
        f"{len(summary.exceptions)} exceptional-field points, "
        f"{len(summary.violations)} violations, {len(summary.errors)} errors",
        file=sys.stderr if path is None else sys.stdout,
    )
    if summary.violations:
        return EXIT_VIOLATION
    if summary.errors:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_pullback(args, cfg: Config) -> int:
    p = x16.point_from_t(args.t, cfg.budget())
    res = x16.cl5_pullback(p, cfg.budget())
    print(f"t = {res.t}: disc = {res.disc}, class = {res.ideal_class_form}, order = {res.order}")
    return EXIT_OK


def _cmd_verify_claims(args, cfg: Config) -> int:
    results = identities.verify_all(args.only)
    failed = False
    for r in results:
        print(f"{r.id:22s} {r.status:8s} {r.elapsed * 1000:8.2f} ms  {r.description}")
        failed = failed or r.status == "fail"
    return EXIT_VIOLATION if failed else EXIT_OK


def _cmd_verify_table1(args, cfg: Config) -> int:
    ok = True
    for d, expected in ((-15, 2), (-2030, 40)):
        disc = arith.fundamental_discriminant(d)
        h = quadform.class_number(disc)
        line_ok = h == expected
        ok = ok and line_ok
        print(f"h(Q(sqrt({d}))) = {h} (expected {expected}): {'ok' if line_ok else 'MISMATCH'}")
    points_ok = x16.verify_prop34_points()
    print(f"sextic-curve point list and x-images: {'ok' if points_ok else 'MISMATCH'}")
    cor_ok = x16.corollary15_check()
    print(f"5 does not divide h for the eight listed fields: {'ok' if cor_ok else 'MISMATCH'}")
    return EXIT_OK if ok and points_ok and cor_ok else EXIT_VIOLATION


def _cmd_verify_example6(args, cfg: Config) -> int:
    checks = ecq.section6_checks(cfg.prime_rounds)
    for name, good in checks:
        print(f"{'ok' if good else 'FAIL'}  {name}")
    return EXIT_OK if all(good for _, good in checks) else EXIT_VIOLATION


def _cmd_heuristic(args, cfg: Config) -> int:
    writer = _Writer(args.jsonl or cfg.output_path, cfg.format)
    records = ecq.heuristic_search(args.mmax, cfg.budget())
    untested = 0
    for r in records:
        untested += r.status == "untested"
        writer.write(
            {
                "m": r.m,
                "u_digits": r.u_digits,
                "v_digits": r.v_digits,
                "p_digits": r.p_digits,
                "z": _s(r.z),
                "status": r.status,
                "certified": r.status == "hit_certified",
            }
        )
    writer.flush()
    hits = sum(1 for r in records if r.is_hit)
    print(f"{len(records)} multiples tested: {hits} hits, {untested} untested", file=sys.stderr)
    return EXIT_BUDGET if untested else EXIT_OK


def _cmd_pi2(args, cfg: Config) -> int:
    try:
        count = ecq.pi2_count(args.n)
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    from math import log

    print(json.dumps({"n": _s(args.n), "count": _s(count), "ratio": count * log(args.n) / args.n}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="x16class",
        description="class-number divisibility toolkit for imaginary quadratic fields",
    )
    ap.add_argument("--config", help=f"config JSON path (default: ${CONFIG_ENV})")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor an integer within the budget")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("classgroup", help="class number / group structure of a discriminant")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--forms", action="store_true", help="also list the reduced forms")
    p.add_argument("--structure", action="store_true", help="also print elementary divisors")
    p.set_defaults(handler=_cmd_classgroup)

    p = sub.add_parser("census", help="divisibility census over bounded-height parameters")
    p.add_argument("--height", type=int)
    p.add_argument("--jsonl", help="output path (default stdout)")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("pullback", help="order-5 ideal class pullback at a parameter t")
    p.add_argument("--t", type=_parse_rational, required=True)
    p.set_defaults(handler=_cmd_pullback)

    p = sub.add_parser("verify-claims", help="run the algebraic claim registry")
    p.add_argument("--only", help="single claim id")
    p.set_defaults(handler=_cmd_verify_claims)

    p = sub.add_parser("verify-table1", help="class numbers, point list, and 5-indivisibility checks")
    p.set_defaults(handler=_cmd_verify_table1)

    p = sub.add_parser("verify-example6", help="verify the pinned 181-digit example")
    p.set_defaults(handler=_cmd_verify_example6)

    p = sub.add_parser("heuristic", help="p z^2 search along multiples of the generator")
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--jsonl", help="output path (default stdout)")
    p.set_defaults(handler=_cmd_heuristic)

    p = sub.add_parser("pi2", help="count integers below n of the form p z^2")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_pi2)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"bad configuration: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args, cfg)
    except IncompleteFactorization as exc:
        print(f"factorization budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except X16Error as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
