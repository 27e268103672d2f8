"""Command-line front end.

    polydedekind bernoulli --max-n 12
    polydedekind polybernoulli --k 2 --max-n 6 --at 1/3
    polydedekind stirling1 --max-n 6
    polydedekind sum --kind classical --h 1 --m 3
    polydedekind verify --identity theorem10 --h 1..4 --m 1..4 --p 1..3 --k -1..2 --format json

Exit status: 0 on success, 1 if any identity fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from contextlib import nullcontext
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import classical, dedekind, polybernoulli
from .report import PreconditionError
from .sweeps import IDENTITY_NAMES, PARAM_ORDER, run_sweep

__all__ = ["main", "parse_rational", "format_rational", "parse_range"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_RANGE = re.compile(r"^\s*(-?\d+)(?:\.\.(-?\d+))?\s*$")


class UsageError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"7/3"``, ``"-1/3"`` or ``"5"``; zero denominators are rejected."""
    match = _RATIONAL.match(text)
    if not match:
        raise UsageError(f"not a rational number: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise UsageError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_range(text: str) -> List[int]:
    """``"a..b"`` inclusive, or a single integer."""
    match = _RANGE.match(text)
    if not match:
        raise UsageError(f"not an integer or a..b range: {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise UsageError(f"empty range {text!r}: lower bound exceeds upper bound")
    return list(range(lo, hi + 1))


def _stirling_entry(text: str):
    try:
        n, m = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected N,M") from None
    return n, m


# ---------------------------------------------------------------- output

class _Writer:
    """Line-streaming emitter for one of the three output formats."""

    def __init__(self, fmt: str, columns: Sequence[str], out):
        self.fmt = fmt
        self.columns = list(columns)
        self.out = out
        if fmt == "csv":
            self._emit_csv(self.columns)

    def _emit_csv(self, row) -> None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerow(row)
        self.out.write(buf.getvalue())

    def row(self, record: Dict[str, object]) -> None:
        if self.fmt == "json":
            self.out.write(json.dumps(record) + "\n")
        elif self.fmt == "csv":
            self._emit_csv(["" if record.get(c) is None else record.get(c) for c in self.columns])
        else:
            self.out.write("  ".join(f"{c}={record[c]}" for c in self.columns if c in record) + "\n")


def _verify_record(line) -> Dict[str, object]:
    if line.report is None:
        return {"identity": line.identity, "params": line.params, "skipped": line.skipped}
    rep = line.report
    return {
        "identity": line.identity,
        "params": line.params,
        "lhs": format_rational(rep.lhs),
        "rhs": format_rational(rep.rhs),
        "holds": rep.holds,
    }


def _write_verify(fmt: str, lines, out) -> int:
    status = EXIT_OK
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["identity", *PARAM_ORDER, "lhs", "rhs", "holds"])
    for line in lines:
        rec = _verify_record(line)
        if line.failed:
            status = EXIT_FAIL
        if fmt == "json":
            out.write(json.dumps(rec) + "\n")
        elif fmt == "csv":
            params = [rec["params"].get(p, "") for p in PARAM_ORDER]
            if "skipped" in rec:
                writer.writerow([rec["identity"], *params, "", "", f"skipped:{rec['skipped']}"])
            else:
                writer.writerow([rec["identity"], *params, rec["lhs"], rec["rhs"], str(rec["holds"]).lower()])
        else:
            params = " ".join(f"{k}={v}" for k, v in rec["params"].items())
            if "skipped" in rec:
                out.write(f"{rec['identity']:<22} {params:<26} skipped ({rec['skipped']})\n")
            else:
                mark = "holds" if rec["holds"] else "FAILS"
                out.write(f"{rec['identity']:<22} {params:<26} {mark}  lhs={rec['lhs']}  rhs={rec['rhs']}\n")
    return status


# ---------------------------------------------------------------- commands

def _cmd_bernoulli(args, out) -> int:
    w = _Writer(args.format, ["n", "value"], out)
    for n, b in enumerate(classical.bernoulli_numbers(args.max_n)):
        w.row({"n": n, "value": format_rational(b)})
    return EXIT_OK


def _cmd_polybernoulli(args, out) -> int:
    if args.at is None:
        w = _Writer(args.format, ["k", "n", "value"], out)
        for n, b in enumerate(polybernoulli.poly_bernoulli_numbers(args.k, args.max_n)):
            w.row({"k": args.k, "n": n, "value": format_rational(b)})
    else:
        x = parse_rational(args.at)
        w = _Writer(args.format, ["k", "n", "x", "value"], out)
        for n in range(args.max_n + 1):
            value = polybernoulli.poly_bernoulli_poly(args.k, n)(x)
            w.row({"k": args.k, "n": n, "x": format_rational(x), "value": format_rational(value)})
    return EXIT_OK


def _cmd_stirling1(args, out) -> int:
    table = classical.stirling1_table(args.max_n)
    if args.format == "plain":
        width = max(len(str(table[n, m])) for n in range(args.max_n + 1) for m in range(n + 1))
        for n in range(args.max_n + 1):
            out.write(" ".join(str(v).rjust(width) for v in table.row(n)) + "\n")
        return EXIT_OK
    w = _Writer(args.format, ["n", "m", "value"], out)
    for n in range(args.max_n + 1):
        for m in range(n + 1):
            w.row({"n": n, "m": m, "value": table[n, m]})
    return EXIT_OK


def _cmd_sum(args, out) -> int:
    hs, ms = parse_range(args.h), parse_range(args.m)
    ps = parse_range(args.p) if args.p is not None else [1]
    ks = parse_range(args.k) if args.k is not None else [1]
    if args.kind == "classical":
        ps, ks = [1], [1]
    elif args.kind == "apostol":
        ks = [1]
    if min(hs) < 1 or min(ms) < 1 or min(ps) < 1:
        raise UsageError("h, m and p must be positive")
    rows = dedekind.sum_table(args.kind, hs, ms, ps, ks)
    if len(rows) == 1 and args.format == "plain":
        out.write(format_rational(rows[0][1]) + "\n")
        return EXIT_OK
    cols = {"classical": ["h", "m"], "apostol": ["h", "m", "p"], "poly": ["h", "m", "p", "k"]}[args.kind]
    w = _Writer(args.format, cols + ["value"], out)
    for params, value in rows:
        rec = {c: getattr(params, c) for c in cols}
        rec["value"] = format_rational(value)
        w.row(rec)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    ranges = {}
    for name in PARAM_ORDER:
        raw = getattr(args, name, None)
        if raw is not None:
            ranges[name] = parse_range(raw)
    hook = (
        classical.stirling_override({args.corrupt_stirling: _corrupted(*args.corrupt_stirling)})
        if args.corrupt_stirling
        else nullcontext()
    )
    with hook:
        return _write_verify(args.format, run_sweep(args.identity, ranges, args.fail_fast), out)


def _corrupted(n: int, m: int) -> int:
    return classical.stirling1_table(max(n, 0))[n, m] + 1


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydedekind",
        description="Exact poly-Bernoulli polynomials, poly-Dedekind sums and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("bernoulli", help="Bernoulli numbers B_0..B_N")
    p.add_argument("--max-n", type=int, required=True)
    fmt(p)

    p = sub.add_parser("polybernoulli", help="type 2 poly-Bernoulli numbers or polynomial values")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--at", help="evaluate B_n^(k)(x) at this rational instead")
    fmt(p)

    p = sub.add_parser("stirling1", help="signed Stirling numbers of the first kind")
    p.add_argument("--max-n", type=int, required=True)
    fmt(p)

    p = sub.add_parser("sum", help="classical, Apostol or poly-Dedekind sums")
    p.add_argument("--kind", choices=("classical", "apostol", "poly"), required=True)
    p.add_argument("--h", required=True, help="integer or a..b")
    p.add_argument("--m", required=True, help="integer or a..b")
    p.add_argument("--p", help="integer or a..b (default 1)")
    p.add_argument("--k", help="integer or a..b (default 1)")
    fmt(p)

    p = sub.add_parser("verify", help="check identities over parameter ranges")
    p.add_argument("--identity", choices=IDENTITY_NAMES + ("all",), required=True)
    for name in PARAM_ORDER:
        p.add_argument(f"--{name}", help="integer or a..b")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first failing line")
    p.add_argument("--corrupt-stirling", type=_stirling_entry, help=argparse.SUPPRESS)
    fmt(p)
    return parser


_COMMANDS = {
    "bernoulli": _cmd_bernoulli,
    "polybernoulli": _cmd_polybernoulli,
    "stirling1": _cmd_stirling1,
    "sum": _cmd_sum,
    "verify": _cmd_verify,
}


_NEGATIVE_VALUE = re.compile(r"^-\d")


def _glue_negative_values(argv: Sequence[str]) -> List[str]:
    # argparse reads "--k -1..2" as two options; rewrite it as "--k=-1..2"
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_n", 0) < 0:
        print("polydedekind: error: --max-n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, PreconditionError, ValueError) as exc:
        print(f"polydedekind: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
