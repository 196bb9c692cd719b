"""Command-line front end: tables, series expansions, verification runs.

All results go to standard out and are byte-identical across repeated
invocations; diagnostics (timing) go to standard error.  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import combinatorics, poincare, verify, virtual
from .ring import LaurentPoly, TruncSeries

K_LIMIT = 32
N_LIMIT = 64

SERIES_FAMILIES = (
    "standard-unordered",
    "standard-ordered",
    "virtual-unordered",
    "virtual-unordered-raw",
    "virtual-ordered",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confpoly",
        description=(
            "Poincare polynomials (standard and virtual) of configuration "
            "spaces of the plane with k punctures, with cross-verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print value tables")
    table_sub = table.add_subparsers(dest="subject", required=True)

    pyr = table_sub.add_parser("pyramidal", help="table of pyramidal numbers")
    pyr.add_argument("--max-k", type=int, default=3)
    pyr.add_argument("--max-i", type=int, default=4)
    pyr.add_argument("--format", choices=("csv", "latex"), default="csv")

    betti = table_sub.add_parser("betti", help="Betti numbers / virtual polynomials")
    betti.add_argument("--space", choices=("unordered", "ordered"), default="unordered")
    betti.add_argument("--kind", choices=("standard", "virtual"), default="standard")
    betti.add_argument("-k", type=int, required=True, help="number of punctures")
    betti.add_argument("--max-n", type=int, required=True)
    betti.add_argument("--format", choices=("csv", "json", "latex"), default="csv")

    series = sub.add_parser("series", help="print generating-series coefficients")
    series.add_argument("--family", choices=SERIES_FAMILIES, required=True)
    series.add_argument("-k", type=int, required=True)
    series.add_argument("--order", type=int, required=True)

    ver = sub.add_parser("verify", help="run cross-verification suites")
    ver.add_argument(
        "suite_pos", nargs="?", metavar="suite",
        choices=("all",) + verify.SUITES, help="suite to run (default: all)",
    )
    ver.add_argument("--suite", choices=("all",) + verify.SUITES)
    ver.add_argument("-k", type=int, default=None, help="restrict to a single k")
    ver.add_argument("--max-k", type=int, default=None)
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument(
        "--space", choices=("unordered", "ordered", "both"), default="both"
    )
    ver.add_argument("--primes", default="2,3,5,7", help="comma-separated primes")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        if args.subject == "pyramidal":
            return _cmd_table_pyramidal(parser, args)
        return _cmd_table_betti(parser, args)
    if args.command == "series":
        return _cmd_series(parser, args)
    return _cmd_verify(parser, args)


# -- table ------------------------------------------------------------


def _require(parser: argparse.ArgumentParser, ok: bool, message: str) -> None:
    if not ok:
        parser.error(message)  # exits with status 2


def _cmd_table_pyramidal(parser, args) -> int:
    _require(parser, -1 <= args.max_k <= K_LIMIT, f"--max-k must be in [-1, {K_LIMIT}]")
    _require(parser, 0 <= args.max_i <= N_LIMIT, f"--max-i must be in [0, {N_LIMIT}]")
    table = combinatorics.PyramidalTable.build(args.max_k, args.max_i)
    if args.format == "csv":
        for row in table.rows:
            print(",".join(str(v) for v in row))
    else:
        cols = "c|" + "c" * (args.max_i + 1)
        print(rf"\begin{{tabular}}{{{cols}}}")
        header = " & ".join(str(i) for i in range(args.max_i + 1))
        print(rf"$k \backslash i$ & {header} \\")
        print(r"\midrule")
        body = []
        for k, row in zip(range(-1, args.max_k + 1), table.rows):
            body.append(f"{k} & " + " & ".join(str(v) for v in row))
        print(" \\\\\n".join(body))
        print(r"\end{tabular}")
    return 0


def _standard_row(space: str, k: int, n: int) -> list[int]:
    if space == "unordered":
        return list(poincare.betti_unordered(k, n).ranks)
    p = poincare.poincare_ordered(k, n)
    return [p.coefficient(i) for i in range(n + 1)]


def _virtual_row(space: str, k: int, n: int) -> LaurentPoly:
    if space == "unordered":
        return virtual.virtual_unordered(k, n).poly
    return virtual.virtual_ordered(k, n).poly


def _cmd_table_betti(parser, args) -> int:
    _require(parser, 0 <= args.k <= K_LIMIT, f"-k must be in [0, {K_LIMIT}]")
    _require(parser, 0 <= args.max_n <= N_LIMIT, f"--max-n must be in [0, {N_LIMIT}]")
    k, space, kind = args.k, args.space, args.kind
    rows = []
    for n in range(args.max_n + 1):
        if kind == "standard":
            ranks = _standard_row(space, k, n)
            poly = LaurentPoly({i: r for i, r in enumerate(ranks)})
            rows.append({"k": k, "n": n, "ranks": ranks, "poly": poly})
        else:
            poly = _virtual_row(space, k, n)
            rows.append({"k": k, "n": n, "poly": poly})
    if args.format == "csv":
        for row in rows:
            if kind == "standard":
                print(",".join(str(r) for r in row["ranks"]))
            else:
                print(row["poly"])
    elif args.format == "json":
        payload = []
        for row in rows:
            entry = {"k": k, "n": row["n"]}
            if kind == "standard":
                entry["ranks"] = [str(r) for r in row["ranks"]]
            else:
                poly = row["poly"]
                entry["coeffs"] = [
                    str(poly.coefficient(e)) for e in range(2 * row["n"] + 1)
                ]
            entry["poly"] = str(row["poly"])
            payload.append(entry)
        print(json.dumps(payload, indent=2))
    else:
        print(r"\begin{tabular}{r|l}")
        print(r"$n$ & polynomial \\")
        print(r"\midrule")
        body = [f"{row['n']} & ${row['poly']}$" for row in rows]
        print(" \\\\\n".join(body))
        print(r"\end{tabular}")
    return 0


# -- series -----------------------------------------------------------


def _family_series(family: str, k: int, order: int) -> TruncSeries:
    if family == "standard-unordered":
        return poincare.unordered_series(k, order)
    if family == "standard-ordered":
        return TruncSeries(
            order, [poincare.poincare_ordered(k, n) for n in range(order + 1)]
        )
    if family == "virtual-unordered":
        return virtual.virtual_unordered_series(k, order)
    if family == "virtual-unordered-raw":
        return virtual.getzler_series_raw(k, order)
    return TruncSeries(
        order, [virtual.virtual_ordered(k, n).poly for n in range(order + 1)]
    )


def _cmd_series(parser, args) -> int:
    _require(parser, 0 <= args.k <= K_LIMIT, f"-k must be in [0, {K_LIMIT}]")
    _require(parser, 0 <= args.order <= N_LIMIT, f"--order must be in [0, {N_LIMIT}]")
    series = _family_series(args.family, args.k, args.order)
    for coeff in series.coeffs:
        print(coeff)
    return 0


# -- verify -----------------------------------------------------------


def _parse_primes(parser, raw: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(p) for p in raw.split(",") if p.strip())
    except ValueError:
        parser.error(f"--primes must be comma-separated integers, got {raw!r}")
    _require(parser, bool(primes), "--primes must name at least one prime")
    return primes


def _format_check(c: verify.CheckResult) -> str:
    status = "PASS" if c.passed else "FAIL"
    line = f"{status} suite={c.suite} space={c.space} k={c.k} n={c.n}"
    if c.detail:
        line += f" | {c.detail}"
    return line


def _cmd_verify(parser, args) -> int:
    suite = args.suite_pos or args.suite or "all"
    if args.suite_pos and args.suite and args.suite_pos != args.suite:
        parser.error(f"conflicting suites: {args.suite_pos} vs {args.suite}")
    if args.k is not None:
        _require(parser, 0 <= args.k <= K_LIMIT, f"-k must be in [0, {K_LIMIT}]")
    if args.max_k is not None:
        _require(parser, 0 <= args.max_k <= K_LIMIT, f"--max-k must be in [0, {K_LIMIT}]")
    if args.max_n is not None:
        _require(parser, 0 <= args.max_n <= N_LIMIT, f"--max-n must be in [0, {N_LIMIT}]")
    spaces = ("unordered", "ordered") if args.space == "both" else (args.space,)
    primes = _parse_primes(parser, args.primes)

    summary, results = verify.run_suites(
        [suite],
        only_k=args.k,
        max_k=args.max_k,
        max_n=args.max_n,
        spaces=spaces,
        primes=primes,
    )

    if suite == "all":
        per_suite: dict[str, list[verify.CheckResult]] = {}
        for r in results:
            per_suite.setdefault(r.suite, []).append(r)
        for name in summary.suites:
            group = per_suite.get(name, [])
            bad = sum(1 for r in group if not r.passed)
            print(f"suite {name}: {len(group)} checks, {bad} failed")
        for r in results:
            if not r.passed:
                print(_format_check(r))
    else:
        for r in results:
            print(_format_check(r))

    print(
        f"summary: suites={','.join(summary.suites)} "
        f"passed={summary.passed} failed={summary.failed}"
    )
    if summary.first_failure is not None:
        print(f"first failure: {_format_check(summary.first_failure)}")
    print(f"result: {'PASS' if summary.ok else 'FAIL'}")
    print(f"verified in {summary.duration:.2f}s", file=sys.stderr)
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
