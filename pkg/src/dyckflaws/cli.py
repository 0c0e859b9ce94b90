"""Command-line surface: tables, bijections, series dumps and verification.

Exit codes: 0 all pass, 1 verification failure, 2 usage error.  Reports
go to stdout as deterministic JSON (fixed key order, counts as decimal
strings); timing and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import bijections
from .enumeration import StatKind, count_table
from .paths import InvalidPathError, parse_path, stats
from .polynomials import format_poly
from .series import (
    ZSeries,
    catalan_double_ascent_series,
    catalan_peak_series,
    catalan_valley_series,
    flawed_double_ascent_series,
    flawed_peak_series,
    run_identity_suite,
)
from .verification import SUITE_NAMES, run_suites

USAGE_EXIT = 2
FAILURE_EXIT = 1


class UsageError(Exception):
    """Bad flag combination or flag value; exits with code 2."""


@dataclass
class RunReport:
    command: str
    parameters: dict
    status: str
    payload: object
    elapsed_ms: float

    def to_json(self) -> str:
        # elapsed is deliberately left out: identical invocations must
        # produce byte-identical output
        doc = {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "payload": self.payload,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)


SERIES_BUILDERS = {
    "catalan_peak": catalan_peak_series,
    "catalan_valley": catalan_valley_series,
    "catalan_double_ascent": catalan_double_ascent_series,
    "flawed_peak": flawed_peak_series,
    "flawed_double_ascent": flawed_double_ascent_series,
}

_STAT_BY_NAME = {kind.value: kind for kind in StatKind}


def _emit(text: str, out: Optional[str]) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _finish(report: RunReport, out: Optional[str]) -> int:
    _emit(report.to_json(), out)
    print(f"elapsed {report.elapsed_ms:.1f} ms", file=sys.stderr)
    return 0 if report.status in ("ok", "pass") else FAILURE_EXIT


def _table_payload(n: int, m: Optional[int], stat: StatKind) -> dict:
    table = count_table(n, stat)
    rows = sorted(table.entries) if m is None else [m]
    return {
        "n": n,
        "stat": stat.value,
        "rows": {
            str(row): {
                str(k): str(table.entries[row][k])
                for k in sorted(table.entries[row])
            }
            for row in rows
        },
    }


def cmd_table(args) -> int:
    if args.m is not None and args.m > args.n:
        raise UsageError(f"--m must be at most --n ({args.m} > {args.n})")
    start = time.perf_counter()
    stat = _STAT_BY_NAME[args.stat]
    table = count_table(args.n, stat)
    if args.format == "csv":
        if args.m is None:
            _emit(table.to_csv(), args.out)
        else:
            row = table.entries.get(args.m, {})
            lines = ["m,k,count"] + [
                f"{args.m},{k},{row[k]}" for k in sorted(row)
            ]
            _emit("\n".join(lines) + "\n", args.out)
        return 0
    if args.format == "pretty":
        if args.m is None:
            lines = [
                f"m={m}: {format_poly(table.polynomial(m))}"
                for m in sorted(table.entries)
            ]
            _emit("\n".join(lines), args.out)
        else:
            _emit(format_poly(table.polynomial(args.m)), args.out)
        return 0
    payload = _table_payload(args.n, args.m, stat)
    elapsed = (time.perf_counter() - start) * 1000
    report = RunReport(
        command="table",
        parameters={"n": args.n, "m": args.m, "stat": args.stat,
                    "format": args.format},
        status="ok",
        payload=payload,
        elapsed_ms=elapsed,
    )
    return _finish(report, args.out)


def _stat_dict(vec) -> dict:
    return {
        "semilength": vec.semilength,
        "flaws": vec.flaws,
        "peaks": vec.peaks,
        "valleys": vec.valleys,
        "double_ascents": vec.double_ascents,
        "double_descents": vec.double_descents,
    }


def cmd_biject(args) -> int:
    if args.show_decomposition and args.map in ("phi", "psi"):
        raise UsageError("--show-decomposition applies only to cf and cf_inv")
    start = time.perf_counter()
    try:
        path = parse_path(args.word)
    except InvalidPathError as exc:
        raise UsageError(f"--word: {exc}") from exc
    decomposition = None
    try:
        if args.map == "phi":
            image = bijections.complement(path)
        elif args.map == "psi":
            image = bijections.reverse_complement(path)
        elif args.map == "cf":
            if args.show_decomposition:
                decomposition = bijections.cf_decompose_forward(path).display()
            image = bijections.cf_step(path)
        else:
            if args.show_decomposition:
                decomposition = bijections.cf_inverse_decomposition(path).display()
            image = bijections.cf_step_inverse(path)
    except bijections.BijectionDomainError as exc:
        raise UsageError(f"--word: {exc}") from exc
    payload = {
        "map": args.map,
        "input": str(path),
        "output": str(image),
        "input_stats": _stat_dict(stats(path)),
        "output_stats": _stat_dict(stats(image)),
    }
    if decomposition is not None:
        payload["decomposition"] = decomposition
    elapsed = (time.perf_counter() - start) * 1000
    report = RunReport(
        command="biject",
        parameters={"map": args.map, "word": args.word.upper()},
        status="ok",
        payload=payload,
        elapsed_ms=elapsed,
    )
    return _finish(report, args.out)


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    start = time.perf_counter()
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    payload = run_suites(names, args.n_max, args.order)
    elapsed = (time.perf_counter() - start) * 1000
    report = RunReport(
        command="verify",
        parameters={"suite": args.suite, "n_max": args.n_max,
                    "order": args.order},
        status=payload["status"],
        payload=payload,
        elapsed_ms=elapsed,
    )
    return _finish(report, args.out)


def cmd_series(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    start = time.perf_counter()
    if args.name == "identities":
        reports = run_identity_suite(args.order)
        payload = [r.to_json_dict() for r in reports]
        status = "pass" if all(r.status == "pass" for r in reports) else "fail"
    else:
        series: ZSeries = SERIES_BUILDERS[args.name](args.order)
        coeffs = {}
        for n in range(args.order + 1):
            terms = series.coeff(n).terms
            by_x: dict = {}
            for (kx, ky) in sorted(terms):
                by_x.setdefault(str(kx), {})[str(ky)] = str(terms[(kx, ky)])
            coeffs[str(n)] = by_x
        payload = {"name": args.name, "order": args.order, "coefficients": coeffs}
        status = "ok"
    elapsed = (time.perf_counter() - start) * 1000
    report = RunReport(
        command="series",
        parameters={"name": args.name, "order": args.order},
        status=status,
        payload=payload,
        elapsed_ms=elapsed,
    )
    return _finish(report, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckflaws",
        description="Exact Dyck-path-with-flaws tables, maps and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="statistic count tables")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--m", type=int, default=None)
    p_table.add_argument("--stat", choices=sorted(_STAT_BY_NAME), required=True)
    p_table.add_argument("--format", choices=["json", "csv", "pretty"],
                         default="pretty")
    p_table.add_argument("--out", default=None)
    p_table.set_defaults(func=cmd_table)

    p_biject = sub.add_parser("biject", help="apply one of the maps")
    p_biject.add_argument("--map", choices=["phi", "psi", "cf", "cf_inv"],
                          required=True)
    p_biject.add_argument("--word", required=True)
    p_biject.add_argument("--show-decomposition", action="store_true")
    p_biject.add_argument("--out", default=None)
    p_biject.set_defaults(func=cmd_biject)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", choices=list(SUITE_NAMES) + ["all"],
                          default="all")
    p_verify.add_argument("--n-max", type=int, default=10)
    p_verify.add_argument("--order", type=int, default=8)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_series = sub.add_parser("series", help="dump generating-function coefficients")
    p_series.add_argument("--name",
                          choices=sorted(SERIES_BUILDERS) + ["identities"],
                          required=True)
    p_series.add_argument("--order", type=int, default=8)
    p_series.add_argument("--out", default=None)
    p_series.set_defaults(func=cmd_series)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
