"""
Command-line interface.

Usage:
    semigap info 5 8
    semigap gsum 3 4 -1 --method all
    semigap verify 2 3 4 --kind both
    semigap scan --dmax 10 --n-min 2 --n-max 4 --format csv

Exit codes: 0 success, 1 a verification failed, 2 invalid usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import Decimal
from fractions import Fraction
from itertools import combinations

from . import __version__
from .errors import SemigapError
from .identities import (
    DEFAULT_TOLERANCE,
    IdentityReport,
    identity_from_gaps,
    scan_identities,
    verify_dual_identity,
)
from .semigroup import Semigroup2, g_n_nonneg, gaps
from .series import SeriesValue, g_minus_1_finite, g_minus_n_direct, g_minus_n_zeta

SCHEMA_VERSION = "1"
METHODS = ("direct", "finite", "zeta-a", "zeta-b", "all")
REPORT_FIELDS = ("d1", "d2", "n", "kind", "lhs", "rhs", "residual", "budget", "passed")


class UsageError(Exception):
    pass


def render_float(x: float) -> str:
    """Shortest round-trip digits of ``x``, zero-padded to 17 significant digits.

    >>> render_float(0.1)
    '1.0000000000000000e-01'
    >>> render_float(0.0)
    '0.0000000000000000e+00'
    """
    x = float(x)
    if not math.isfinite(x):
        return repr(x)
    if x == 0.0:
        return "0.0000000000000000e+00"
    sign, digits, exponent = Decimal(repr(x)).as_tuple()
    sci = exponent + len(digits) - 1
    mantissa = "".join(map(str, digits)).ljust(17, "0")
    return f"{'-' if sign else ''}{mantissa[0]}.{mantissa[1:]}e{sci:+03d}"


def render_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _series_payload(v: SeriesValue) -> dict:
    out = {"value": render_float(v.value)}
    if v.exact is not None:
        out["exact"] = render_rational(v.exact)
    return out


def _report_row(r: IdentityReport) -> dict:
    return {
        "d1": r.d1,
        "d2": r.d2,
        "n": r.n,
        "kind": r.kind,
        "lhs": render_float(r.lhs),
        "rhs": render_float(r.rhs),
        "residual": render_float(r.residual),
        "budget": render_float(r.budget),
        "passed": r.passed,
    }


def _record(command: str, inputs: dict, results: dict, error_bounds: dict | None = None) -> dict:
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
    }
    if error_bounds:
        record["error_bounds"] = error_bounds
    return record


def dumps_json(record: dict) -> str:
    return json.dumps(record, indent=2) + "\n"


def cmd_info(args) -> tuple[dict, int]:
    s = Semigroup2(args.d1, args.d2)
    results = {
        "frobenius": s.frobenius,
        "conductor": s.conductor,
        "genus": g_n_nonneg(s, 0),
        "gaps": list(gaps(s)),
    }
    return _record("info", {"d1": args.d1, "d2": args.d2}, results), 0


def _applicable(method: str, n: int) -> list[str]:
    if method == "all":
        routes = ["direct"]
        if n == -1:
            routes.append("finite")
        if n <= -2:
            routes += ["zeta-a", "zeta-b"]
        return routes
    if method == "finite" and n != -1:
        raise UsageError("method 'finite' requires n = -1")
    if method in ("zeta-a", "zeta-b") and n > -2:
        raise UsageError(f"method '{method}' requires n <= -2")
    return [method]


def _route(s: Semigroup2, n: int, route: str):
    if route == "direct":
        if n >= 0:
            return g_n_nonneg(s, n)
        return g_minus_n_direct(s, -n)
    if route == "finite":
        return g_minus_1_finite(s)
    return g_minus_n_zeta(s, -n, "A" if route == "zeta-a" else "B")


def cmd_gsum(args) -> tuple[dict, int]:
    s = Semigroup2(args.d1, args.d2)
    n = args.n
    results, bounds, values = {}, {}, {}
    for route in _applicable(args.method, n):
        v = _route(s, n, route)
        if isinstance(v, int):
            results[route] = {"value": render_float(v), "exact": render_rational(v)}
            values[route] = Fraction(v)
        else:
            results[route] = _series_payload(v)
            values[route] = v.exact if v.exact is not None else v.value
            if v.exact is None:
                bounds[route] = render_float(v.error_bound)
    if args.method == "all":
        # exact routes are compared exactly, anything involving a float in floating point
        gap = max((abs(a - b) for a, b in combinations(values.values(), 2)), default=0)
        results["discrepancy"] = render_float(gap)
    inputs = {"d1": args.d1, "d2": args.d2, "n": n, "method": args.method}
    return _record("gsum", inputs, results, bounds), 0


def cmd_verify(args) -> tuple[dict, int]:
    s = Semigroup2(args.d1, args.d2)
    if args.n < 2:
        raise UsageError(f"n must be >= 2, got {args.n}")
    reports = []
    if args.kind in ("dual", "both"):
        reports.append(verify_dual_identity(s.d1, s.d2, args.n, args.tolerance, args.strict))
    if args.kind in ("gaps", "both"):
        reports.append(identity_from_gaps(s, args.n, args.tolerance, args.strict))
    passed = all(r.passed for r in reports)
    inputs = {
        "d1": args.d1,
        "d2": args.d2,
        "n": args.n,
        "kind": args.kind,
        "strict": args.strict,
        "tolerance": render_float(args.tolerance),
    }
    results = {"reports": [_report_row(r) for r in reports], "passed": passed}
    return _record("verify", inputs, results), 0 if passed else 1


def _rows_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "passed": "true" if row["passed"] else "false"})
    return buf.getvalue()


def cmd_scan(args) -> tuple[dict, int]:
    if args.dmax < 3:
        raise UsageError(f"--dmax must be >= 3, got {args.dmax}")
    if not 2 <= args.n_min <= args.n_max <= 64:
        raise UsageError("need 2 <= --n-min <= --n-max <= 64")
    reports = scan_identities(
        args.dmax,
        range(args.n_min, args.n_max + 1),
        tolerance=args.tolerance,
        strict=args.strict,
        jobs=args.jobs,
    )
    n_passed = sum(r.passed for r in reports)
    summary = {"rows": len(reports), "passed": n_passed, "failed": len(reports) - n_passed}
    inputs = {
        "dmax": args.dmax,
        "n_min": args.n_min,
        "n_max": args.n_max,
        "strict": args.strict,
        "tolerance": render_float(args.tolerance),
    }
    results = {"rows": [_report_row(r) for r in reports], "summary": summary}
    return _record("scan", inputs, results), 0 if summary["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="relative tolerance for identity checks (default 1e-12)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="semigap",
        description="Gap series and Hurwitz zeta identities of two-generator numerical semigroups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="Frobenius number, conductor, genus, gaps")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("gsum", parents=[common], help="power sum of the gaps with exponent n")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("n", type=int, help="exponent; negative for inverse powers")
    p.add_argument("--method", choices=METHODS, default="direct")
    p.set_defaults(func=cmd_gsum)

    p = sub.add_parser("verify", parents=[common], help="check the zeta identities for one pair")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=("dual", "gaps", "both"), default="both")
    p.add_argument("--strict", action="store_true", help="pass only within the rigorous error budget")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="check both identities over all coprime pairs")
    p.add_argument("--dmax", type=int, default=10)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def _render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps_json(record)
    if record["command"] == "scan":
        return _rows_csv(record["results"]["rows"])
    return _flat_csv(record)


def _flat_csv(record: dict) -> str:
    """Two-column key,value CSV for the single-record commands."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}.{k}" if prefix else k, v)
        elif isinstance(obj, list) and obj and isinstance(obj[0], dict):
            for i, v in enumerate(obj):
                walk(f"{prefix}.{i}", v)
        elif isinstance(obj, list):
            writer.writerow([prefix, " ".join(str(x) for x in obj)])
        elif isinstance(obj, bool):
            writer.writerow([prefix, "true" if obj else "false"])
        else:
            writer.writerow([prefix, obj])

    walk("", {k: record[k] for k in ("command", "inputs", "results", "error_bounds") if k in record})
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, code = args.func(args)
    except (SemigapError, UsageError) as exc:
        print(f"semigap {args.command}: error: {exc}", file=sys.stderr)
        return 2

    summary = record["results"].get("summary") if args.command == "scan" else None
    text = _render(record, args.format)
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"semigap {args.command}: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    if summary is not None:
        print(f"rows={summary['rows']} passed={summary['passed']} failed={summary['failed']}",
              file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
