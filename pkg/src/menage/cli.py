"""Command-line front end.

Every command builds an :class:`OutputDocument` and renders it as json, csv
or plain text.  Exit codes: 0 ok, 1 mismatch between methods, 2 usage or
input error.  Integers are written as decimal strings in json.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from .matrix import MatrixParseError, read_matrix
from .menage import (
    cayley_h,
    fixed_seat_count,
    fixed_seat_permanent,
    straight_table_count,
    straight_table_permanent,
    touchard_u,
    u_via_permanent,
)
from .problem3 import SCAN_MAX_N, constant_values, scan
from .rook import fact, rook_polynomial
from .verify import VERIFY_MAX_N, run_verification

METHODS = {"touchard": touchard_u, "cayley": cayley_h, "permanent": u_via_permanent}
PERMANENT_MAX_N = 20
FORMULA_MAX_N = 500
EXIT_CODES = {"ok": 0, "mismatch": 1, "error": 2}


class UsageError(ValueError):
    pass


@dataclass
class OutputDocument:
    command: str
    params: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    status: str = "ok"
    summary: str | None = None  # plain rendering only

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "params": _jsonable(self.params),
            "rows": [_jsonable(r) for r in self.rows],
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.rows:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.rows[0].keys())
            for row in self.rows:
                writer.writerow(_csv_cell(v) for v in row.values())
        return buf.getvalue()

    def to_plain(self) -> str:
        lines = []
        if self.rows:
            header = list(self.rows[0].keys())
            table = [header] + [[_csv_cell(v) for v in r.values()] for r in self.rows]
            widths = [max(len(line[c]) for line in table) for c in range(len(header))]
            lines = ["  ".join(v.rjust(w) for v, w in zip(line, widths)) for line in table]
        if self.summary:
            lines.append(self.summary)
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "plain": self.to_plain}[fmt]()


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_csv_cell(v) for v in value)
    return str(value)


def _check_range(lo: int, hi: int, least: int, most: int) -> None:
    if not least <= lo <= hi:
        raise UsageError(f"need {least} <= min <= max, got {lo}..{hi}")
    if hi > most:
        raise UsageError(f"max = {hi} exceeds the limit of {most}")


def _check_chair(n: int, r: int | None) -> None:
    if n < 3:
        raise UsageError(f"n must be >= 3, got {n}")
    if r is not None and not 3 <= r <= n:
        raise UsageError(f"r must lie in [3, {n}], got {r}")


def cmd_table(lo: int, hi: int, methods: list[str]) -> OutputDocument:
    if not methods or any(m not in METHODS for m in methods):
        raise UsageError(f"methods must be a non-empty subset of {sorted(METHODS)}")
    most = PERMANENT_MAX_N if "permanent" in methods else FORMULA_MAX_N
    _check_range(lo, hi, 2, most)
    doc = OutputDocument("table", {"min": lo, "max": hi, "methods": list(methods)})
    for n in range(lo, hi + 1):
        row: dict[str, Any] = {"n": n}
        values = []
        for m in methods:
            row[f"u_{m}"] = METHODS[m](n)
            values.append(row[f"u_{m}"])
        row["m_total"] = 2 * fact(n) * values[0]
        if len(set(values)) > 1:
            doc.status = "mismatch"
        doc.rows.append(row)
    return doc


def cmd_fixed_seat(n: int, r: int | None, method: str) -> OutputDocument:
    _check_chair(n, r)
    if n > PERMANENT_MAX_N and method != "formula":
        raise UsageError(f"n = {n} exceeds the permanent limit of {PERMANENT_MAX_N}")
    doc = OutputDocument("fixed-seat", {"n": n, "r": r, "method": method})
    for chair in ([r] if r is not None else range(3, n + 1)):
        row: dict[str, Any] = {"n": n, "r": chair, "distance": chair - 1}
        if method in ("formula", "both"):
            row["count_formula"] = fixed_seat_count(n, chair)
        if method in ("permanent", "both"):
            row["count_permanent"] = fixed_seat_permanent(n, chair)
        if method == "both" and row["count_formula"] != row["count_permanent"]:
            doc.status = "mismatch"
        doc.rows.append(row)
    return doc


def cmd_straight(n: int, r: int) -> OutputDocument:
    _check_chair(n, r)
    if n > PERMANENT_MAX_N:
        raise UsageError(f"n = {n} exceeds the permanent limit of {PERMANENT_MAX_N}")
    formula, perm = straight_table_count(n, r), straight_table_permanent(n, r)
    return OutputDocument(
        "straight",
        {"n": n, "r": r},
        [{"n": n, "r": r, "count_formula": formula, "count_permanent": perm}],
        "ok" if formula == perm else "mismatch",
    )


def cmd_problem3(lo: int, hi: int, workers: int | None = None) -> OutputDocument:
    _check_range(lo, hi, 3, SCAN_MAX_N)
    reports = scan(lo, hi, workers=workers)
    rows = [
        {
            "n": rep.n,
            "u_n": rep.u_n,
            "counts": [rep.counts[r] for r in range(3, rep.n + 1)],
            "is_constant": rep.is_constant,
            "common_value": rep.common_value,
            "divides": rep.divides,
            "quotient": rep.quotient,
        }
        for rep in reports
    ]
    const = constant_values(reports)
    summary = "constant for n in: " + (" ".join(map(str, const)) if const else "(none)")
    return OutputDocument("problem3", {"min": lo, "max": hi}, rows, summary=summary)


def cmd_rook(path: str) -> OutputDocument:
    m = read_matrix(path)
    poly = rook_polynomial(m)
    return OutputDocument(
        "rook",
        {"file": path},
        [{"rows": m.rows, "cols": m.cols, "ones": m.ones_count, "coefficients": list(poly)}],
    )


def cmd_verify(max_n: int) -> OutputDocument:
    if max_n > VERIFY_MAX_N:
        raise UsageError(f"max-n = {max_n} exceeds the limit of {VERIFY_MAX_N}")
    results = run_verification(max_n)
    rows = [
        {"family": r.family, "checked": r.checked, "passed": r.passed, "failed": r.failed}
        for r in results
    ]
    status = "ok" if all(r.failed == 0 for r in results) else "mismatch"
    return OutputDocument("verify", {"max_n": max_n}, rows, status)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="menage",
        description="Menage numbers and fixed-seat counts by formula, rook polynomial and permanent.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[fmt], help="U_n and M_n for a range of n")
    p.add_argument("--min", type=int, default=2)
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--methods", default="touchard,cayley,permanent",
                   help="comma-separated subset of touchard,cayley,permanent")

    p = sub.add_parser("fixed-seat", parents=[fmt], help="seatings once man 1 takes chair r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="chair in [3, n]; all chairs if omitted")
    p.add_argument("--method", choices=("formula", "permanent", "both"), default="both")

    p = sub.add_parser("straight", parents=[fmt], help="fixed-seat count at a straight table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = sub.add_parser("problem3", parents=[fmt], help="scan n for chair-independent counts")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--parallel", type=int, default=None, metavar="WORKERS")

    p = sub.add_parser("rook", parents=[fmt], help="rook polynomial of a matrix file")
    p.add_argument("file")

    p = sub.add_parser("verify", parents=[fmt], help="run every cross-identity")
    p.add_argument("--max-n", type=int, default=12)
    return parser


def _dispatch(args) -> OutputDocument:
    if args.command == "table":
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
        return cmd_table(args.min, args.max, methods)
    if args.command == "fixed-seat":
        return cmd_fixed_seat(args.n, args.r, args.method)
    if args.command == "straight":
        return cmd_straight(args.n, args.r)
    if args.command == "problem3":
        return cmd_problem3(args.min, args.max, args.parallel)
    if args.command == "rook":
        return cmd_rook(args.file)
    return cmd_verify(args.max_n)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _dispatch(args)
    except (UsageError, MatrixParseError, OSError) as exc:
        where = f"{args.file}: " if args.command == "rook" else ""
        print(f"menage {args.command}: {where}{exc}", file=sys.stderr)
        params = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
        doc = OutputDocument(args.command, params, status="error")
    sys.stdout.write(doc.render(args.format))
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
