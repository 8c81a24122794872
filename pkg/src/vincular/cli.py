"""Command-line front end: ``vincular {totals,distribution,bijection-check,series,verify}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import statistics, verify
from .closed_forms import lookup
from .expr import ExpressionError, evaluate
from .permutations import occurrences, parse_pattern, total_occurrences
from .series import DEFAULT_ORDER
from .verify import PASS, SUITES, VerificationReport, run_suite

log = logging.getLogger("vincular")

N_CAP = 14
ORDER_ENV = "VINCULAR_ORDER"


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{ORDER_ENV} must be an integer, got {raw!r}")
    if value < 0:
        raise SystemExit(f"{ORDER_ENV} must be nonnegative")
    return value


def parse_range(text: str) -> range:
    """``"5"`` or ``"1..6"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return range(lo, hi + 1)


def _emit(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    cells = [[str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _check_cap(n: int, args) -> None:
    if n > N_CAP and not args.no_cap:
        raise SystemExit(f"n={n} exceeds the enumeration cap of {N_CAP}; pass --no-cap to override")


def cmd_totals(args) -> int:
    pattern = parse_pattern(args.pattern, args.anchor)
    try:
        entry = lookup(pattern, args.avoid)
    except KeyError:
        entry = None
    ns = list(args.n)
    _check_cap(ns[-1], args)
    series = entry.series(ns[-1]) if entry else None
    rows, ok = [], True
    for n in ns:
        row = {"n": n, "total": total_occurrences(n, args.avoid, pattern)}
        if entry:
            expected = entry.closed_form(n) if entry.closed_form else series[n]
            row["formula"] = expected
            row["match"] = "yes" if expected == row["total"] == series[n] else "NO"
            ok &= row["match"] == "yes"
        rows.append(row)
    if entry is None:
        log.info("no closed form for %s on S_n(%s); showing enumeration only", pattern, args.avoid)
    sys.stdout.write(_emit(rows, args.format))
    return 0 if ok else 1


def cmd_distribution(args) -> int:
    _check_cap(args.n, args)
    if args.stat:
        stat, label = args.stat, args.stat
    else:
        pattern = parse_pattern(args.pattern, args.anchor)
        stat, label = (lambda p: occurrences(pattern, p)), str(pattern)
    dist = statistics.distribution(args.n, args.avoid, stat)
    rows = [{"value": k, "count": v} for k, v in dist.items()]
    log.info("%s over S_%d(%s): %d permutations", label, args.n, args.avoid, dist.size)
    sys.stdout.write(_emit(rows, args.format))
    return 0


BIJECTIONS = ("phi321", "psi", "kratt", "theta", "xi")


def cmd_bijection_check(args) -> int:
    _check_cap(args.nmax, args)
    checks = {
        "phi321": verify.check_phi_321,
        "psi": verify.check_simion_schmidt,
        "kratt": verify.check_phi_kratt,
        "theta": verify.check_theta,
        "xi": verify.check_xi,
    }
    names = list(checks) if args.map == "all" else [args.map]
    report = VerificationReport(f"bijection-check {args.map}")
    for name in names:
        report.records.extend(checks[name](args.nmax))
    sys.stdout.write(report.render(args.format))
    return 0 if report.status == PASS else 1


def cmd_series(args) -> int:
    try:
        s = evaluate(args.expr, args.order)
    except ExpressionError as e:
        raise SystemExit(f"bad expression: {e}")
    coeffs = s.to_list()
    if args.format == "text":
        sys.stdout.write(",".join(str(c) for c in coeffs) + "\n")
    else:
        sys.stdout.write(_emit([{"n": n, "coefficient": c} for n, c in enumerate(coeffs)], args.format))
    return 0


def cmd_verify(args) -> int:
    _check_cap(args.nmax, args)
    report = run_suite(args.suite, n_max=args.nmax, order=args.order, jobs=args.jobs)
    sys.stdout.write(report.render(args.format))
    # timing goes to stderr so the report itself stays byte-identical
    print(f"elapsed {report.duration:.2f}s", file=sys.stderr)
    return 0 if report.status == PASS else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vincular", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--no-cap", action="store_true",
                       help=f"allow n above the enumeration cap ({N_CAP})")

    p = sub.add_parser("totals", help="total occurrences of a pattern over an avoidance class")
    p.add_argument("--avoid", default="231")
    p.add_argument("--pattern", required=True)
    p.add_argument("--anchor", choices=("none", "first", "last"), default="none")
    p.add_argument("--n", type=parse_range, default=parse_range("0..8"))
    common(p)
    p.set_defaults(func=cmd_totals)

    p = sub.add_parser("distribution", help="histogram of a statistic or pattern count")
    p.add_argument("--avoid", default="321")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--stat", choices=("inv", "des", "maj", "den"))
    g.add_argument("--pattern")
    p.add_argument("--anchor", choices=("none", "first", "last"), default="none")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("bijection-check", help="exhaustive round trips for one bijection")
    p.add_argument("--map", choices=("all", *BIJECTIONS), default="all")
    p.add_argument("--nmax", type=int, default=8)
    common(p)
    p.set_defaults(func=cmd_bijection_check)

    p = sub.add_parser("series", help="coefficients of an expression in B, C and z")
    p.add_argument("expr")
    p.add_argument("--order", type=int, default=default_order())
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--nmax", type=int, default=9)
    p.add_argument("--order", type=int, default=default_order())
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
