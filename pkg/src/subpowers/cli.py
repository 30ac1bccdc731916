"""Command-line front end.

Exit codes: 0 success, 1 mathematical mismatch or failed identity, 2 usage
error, 3 I/O error.  Integers and rationals are always printed exactly
(rationals as ``p/q``); only ``plot-data`` prints floats, using Python's
shortest round-trip repr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import analytic, checks, core, families, oeis
from .transforms import IntSequence

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3/7, got {text!r}") from None


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(out, lines: Sequence[str]) -> None:
    out.write("".join(line + "\n" for line in lines))


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> List[str]:
    return [",".join(header)] + [",".join(_fmt(v) for v in row) for row in rows]


def _markdown(header: Sequence[str], rows: Sequence[Sequence[str]]) -> List[str]:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---:" for _ in header) + "|"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return lines


def cmd_table(args, out) -> int:
    table = core.subpower_table(args.max_m)
    cols = range(args.max_m + 1)
    if args.format == "json":
        out.write(json.dumps({"rows": [[str(v) for v in row] for row in table.rows]}) + "\n")
    elif args.format == "markdown":
        header = ["m \\ n"] + [str(n) for n in cols]
        rows = [[str(m)] + [str(table.entry(m, n)) if n <= m else "" for n in cols] for m in cols]
        _emit(out, _markdown(header, rows))
    else:
        _emit(out, _csv([str(n) for n in cols], table.rows))
    return EXIT_OK


SEQUENCES = {
    "factorial": lambda i: core.factorial(i),
    "subfactorial": lambda i: core.subfactorial(i),
    "fubini": lambda i: families.fubini(i),
    "harmonic": lambda i: analytic.harmonic(i),
}


def cmd_seq(args, out) -> int:
    count = args.count
    if args.name == "triangle":
        M = 0
        while (M + 1) * (M + 2) // 2 < count:
            M += 1
        values = list(oeis.flatten_triangle(core.subpower_table(M)).values[:count])
    elif args.name == "bernoulli":
        values = list(families.bernoulli(max(count - 1, 0)).values[:count])
    elif args.name == "subpower-row":
        if args.m is None:
            raise UsageError("seq subpower-row needs --m")
        values = list(core.subpower_table(args.m).row(args.m))[:count]
    elif args.name == "subpower-column":
        if args.n is None:
            raise UsageError("seq subpower-column needs --n")
        values = [core.subpower(args.n, m) for m in range(count)]
    else:
        values = [SEQUENCES[args.name](i) for i in range(count)]
    if args.format == "json":
        out.write(json.dumps({"rows": [[str(i), str(v)] for i, v in enumerate(values)]}) + "\n")
    elif args.format == "markdown":
        _emit(out, _markdown(["index", "value"], [[str(i), str(v)] for i, v in enumerate(values)]))
    else:
        _emit(out, _csv(["index", "value"], list(enumerate(values))))
    return EXIT_OK


def cmd_check(args, out) -> int:
    bounds = checks.Bounds(max_m=args.max_m, tol=args.tol)
    suites = checks.SUITES if args.suite == "all" else (args.suite,)
    failed = 0
    total = 0
    for name in suites:
        result = checks.run_suite(name, bounds)
        total += result.checks_run
        failed += len(result.failures)
        status = "PASS" if result.ok else "FAIL"
        out.write(f"[{status}] {name}: {result.checks_run} checks, {len(result.failures)} failures\n")
        for ident, params, detail in result.failures:
            out.write(f"  FAIL {ident} ({params}): {detail}\n")
        for note in result.notes:
            out.write(f"  NOTE {note}\n")
    out.write(f"total: {total} checks, {failed} failures\n")
    return EXIT_OK if failed == 0 else EXIT_MISMATCH


def cmd_fermat(args, out) -> int:
    if args.max_m < 1:
        raise UsageError("--max-m must be at least 1")
    table = core.subpower_table(args.max_m)
    with_solutions = []
    for m in range(1, args.max_m + 1):
        sols = families.fermat_search(m, table.row(m))
        if sols:
            with_solutions.append(m)
            listed = " ".join(f"({s.x},{s.y},{s.z})" for s in sols)
            out.write(f"m={m}: {listed}\n")
        else:
            out.write(f"m={m}: none\n")
    names = ", ".join(str(m) for m in with_solutions) or "none"
    out.write(f"solutions only at m in {{{names}}}\n")
    return EXIT_OK


def cmd_plotdata(args, out) -> int:
    if args.step <= 0:
        raise UsageError("--step must be positive")
    if args.z_min > args.z_max:
        raise UsageError("--z-min must not exceed --z-max")
    zs = analytic.grid(args.z_min, args.z_max, args.step)
    samples = analytic.curve_samples(args.n_max, args.z_min, args.z_max, args.step)
    by_n = {}
    for s in samples:
        by_n.setdefault(s.n, []).append(s.value)
    header = ["z"] + [f"n{n}" for n in range(1, args.n_max + 1)]
    rows = [[z] + [by_n[n][j] for n in range(1, args.n_max + 1)] for j, z in enumerate(zs)]
    if args.format == "json":
        payload = {"samples": [{"n": s.n, "z": s.z, "value": s.value} for s in samples]}
        out.write(json.dumps(payload) + "\n")
    else:
        _emit(out, _csv(header, rows))
    return EXIT_OK


def cmd_oeis(args, out) -> int:
    a_number = oeis.validate_a_number(args.a_number)
    try:
        record = oeis.load_bfile(a_number, fetch=args.fetch)
    except OSError as exc:
        out.write(f"I/O error: {exc}\n")
        return EXIT_IO
    if args.against == "triangle":
        M = 12 if args.max_m is None else args.max_m
        seq = oeis.flatten_triangle(core.subpower_table(M))
    else:
        M = 12 if args.max_m is None else args.max_m
        seq = IntSequence([families.fubini(m) for m in range(M + 1)])
    report = oeis.compare(seq, record)
    out.write(f"{a_number} vs {args.against}: compared {report.compared}, matched {report.matched}\n")
    if report.first_mismatch is not None:
        idx, expected, actual = report.first_mismatch
        out.write(f"first mismatch at index {idx}: b-file {expected}, computed {actual}\n")
        return EXIT_MISMATCH
    out.write("no mismatches\n")
    return EXIT_OK


def cmd_sum_powers(args, out) -> int:
    value = families.sum_powers(args.m, args.n, args.method)
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_bernoulli(args, out) -> int:
    cache = families.bernoulli(args.upto, args.method)
    if args.format == "json":
        out.write(json.dumps({"rows": [[str(m), str(b)] for m, b in enumerate(cache.values)]}) + "\n")
    elif args.format == "markdown":
        _emit(out, _markdown(["m", "B_m"], [[str(m), str(b)] for m, b in enumerate(cache.values)]))
    else:
        _emit(out, _csv(["m", "B_m"], list(enumerate(cache.values))))
    return EXIT_OK


def cmd_fubini(args, out) -> int:
    values = [families.fubini(m, args.method) for m in range(args.max_m + 1)]
    if args.format == "json":
        out.write(json.dumps({"rows": [[str(m), str(v)] for m, v in enumerate(values)]}) + "\n")
    elif args.format == "markdown":
        _emit(out, _markdown(["m", "F(m)"], [[str(m), str(v)] for m, v in enumerate(values)]))
    else:
        _emit(out, _csv(["m", "F(m)"], list(enumerate(values))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subpowers",
        description="Exact subpower numbers (surjection counts) and related number families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    formats = ("csv", "json", "markdown")

    p = sub.add_parser("table", help="subpower triangle n^{m} for 0 <= n <= m <= max-m")
    p.add_argument("--max-m", type=_natural, required=True)
    p.add_argument("--format", choices=formats, default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("seq", help="emit one exact sequence")
    p.add_argument(
        "--name",
        required=True,
        choices=sorted(list(SEQUENCES) + ["triangle", "bernoulli", "subpower-row", "subpower-column"]),
    )
    p.add_argument("--count", type=_natural, default=10)
    p.add_argument("--m", type=_natural, help="row for subpower-row")
    p.add_argument("--n", type=_natural, help="base for subpower-column")
    p.add_argument("--format", choices=formats, default="csv")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("check", help="run identity verification suites")
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.add_argument("--max-m", type=_natural, default=None, help="override the exponent bound of every check")
    p.add_argument("--tol", type=float, default=None, help="override floating tolerances (analytic suite)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fermat", help="exhaustive search for x^{m} + y^{m} = z^{m}")
    p.add_argument("--max-m", type=_natural, required=True)
    p.set_defaults(func=cmd_fermat)

    p = sub.add_parser("plot-data", help="CSV samples of real-exponent subpower curves")
    p.add_argument("--n-max", type=_natural, default=5)
    p.add_argument("--z-min", type=float, default=0.0)
    p.add_argument("--z-max", type=float, default=5.0)
    p.add_argument("--step", type=float, default=0.1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("oeis", help="compare against an OEIS b-file")
    p.add_argument("a_number")
    p.add_argument("--against", choices=("triangle", "fubini"), required=True)
    p.add_argument("--max-m", type=_natural, default=None)
    p.add_argument("--fetch", action="store_true", help="download from oeis.org instead of using snapshots")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("sum-powers", help="1^m + 2^m + ... + n^m")
    p.add_argument("--m", type=_natural, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--method", choices=("direct", "binomial", "bernoulli"), default="direct")
    p.set_defaults(func=cmd_sum_powers)

    p = sub.add_parser("bernoulli", help="Bernoulli numbers B_0..B_upto (B_1 = +1/2)")
    p.add_argument("--upto", type=_natural, required=True)
    p.add_argument("--method", choices=("recurrence", "explicit"), default="recurrence")
    p.add_argument("--format", choices=formats, default="csv")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("fubini", help="Fubini numbers F(0)..F(max-m)")
    p.add_argument("--max-m", type=_natural, required=True)
    p.add_argument("--method", choices=("rowsum", "recurrence"), default="rowsum")
    p.add_argument("--format", choices=formats, default="csv")
    p.set_defaults(func=cmd_fubini)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"subpowers {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"subpowers {args.command}: I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
