"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from . import checks
from .errors import ChowError
from .invariants import InvariantRequest, InvariantResult, evaluate
from .tables import EXPECTED, Key, key_of, table_requests

FIELDS = ("family", "k", "incidence", "value", "curve_count", "elapsed_ms")
CSV_FIELDS = ("family", "k", "a", "b", "c", "value", "curve_count")


def to_record(res: InvariantResult) -> Dict:
    req = res.request
    return {
        "family": req.family,
        "k": req.k,
        "incidence": list(req.incidence) if req.incidence else None,
        "value": str(res.value),
        "curve_count": None if res.curve_count is None else str(res.curve_count),
        "elapsed_ms": res.elapsed_ms,
    }


def format_records(records: List[Dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{k: r[k] for k in FIELDS} for r in records], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in records:
            a, b, c = r["incidence"] or ("", "", "")
            writer.writerow([r["family"], r["k"], a, b, c, r["value"], r["curve_count"] or ""])
        return buf.getvalue()
    lines = []
    for r in records:
        inc = ",".join(map(str, r["incidence"])) if r["incidence"] else "-"
        count = r["curve_count"] if r["curve_count"] is not None else "-"
        lines.append(f"{r['family']:<15} k={r['k']:<3} abc={inc:<8} value={r['value']:<30} "
                     f"curves={count}")
    return "\n".join(lines) + "\n"


def evaluate_all(requests: Sequence[InvariantRequest], threads: int = 1) -> List[InvariantResult]:
    """Evaluate in parallel if asked; results always come back in request order."""
    if threads <= 1 or len(requests) <= 1:
        return [evaluate(r) for r in requests]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(evaluate, requests))


def _parse_incidence(text: str):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"incidence must look like A,B (got {text!r})")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowring",
        description="Count lines and conics on Calabi-Yau hypersurfaces by exact intersection theory.")
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="evaluate table cells in N worker processes")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("lines-weighted", parents=[fmt],
                       help="weighted lines on the Calabi-Yau hypersurface in P(k,1^4)")
    p.add_argument("--weight", type=int, required=True, choices=(2, 4))

    for name, help_ in (("lines", "Gromov-Witten invariant n^a_b(1)"),
                        ("conics", "Gromov-Witten invariant n^a_b(2)")):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("--dim", type=int, required=True, metavar="K",
                       help="dimension k of the hypersurface in P^(k+1)")
        p.add_argument("--incidence", type=_parse_incidence, required=True, metavar="A,B",
                       help="codimensions a,b; c = k - a - b")

    p = sub.add_parser("table", parents=[fmt], help="reproduce a full table")
    p.add_argument("--id", type=int, required=True, choices=(1, 3, 4), dest="table_id")

    p = sub.add_parser("verify", help="recompute and compare against the published values")
    p.add_argument("--scope", choices=("all", "lines", "conics", "engine"), default="all")
    p.add_argument("--expected", metavar="FILE",
                   help="JSON list of {table, k, incidence, value} overriding built-in values")
    return parser


def _load_expected(path: Optional[str]) -> Dict[Key, int]:
    expected = dict(EXPECTED)
    if path:
        with open(path) as fh:
            for row in json.load(fh):
                inc = tuple(sorted(row["incidence"])) if row.get("incidence") else None
                expected[(int(row["table"]), int(row["k"]), inc)] = int(row["value"])
    return expected


def run_verify(scope: str, threads: int, expected_path: Optional[str], out) -> int:
    expected = _load_expected(expected_path)
    tables = {"all": (1, 3, 4), "lines": (1, 3), "conics": (4,), "engine": ()}[scope]
    requests = [r for t in tables for r in table_requests(t)]
    failures = 0
    checked = 0
    for res in evaluate_all(requests, threads):
        key = key_of(res.request)
        want = expected[key]
        checked += 1
        if res.value != want:
            failures += 1
            print(f"MISMATCH table {key[0]} k={key[1]} incidence={key[2]}: "
                  f"expected {want}, computed {res.value}", file=out)
    results: List[checks.CheckResult] = []
    if scope in ("all", "lines"):
        results += checks.fact_identity()
    if scope in ("all", "conics"):
        results += checks.hyperplane_normalisation()
    if scope in ("all", "engine"):
        results += checks.engine_suite()
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}" + (f"  ({r.detail})" if r.detail else ""),
              file=out)
        failures += not r.ok
    print(f"{checked} table values checked, {len(results)} property checks, "
          f"{failures} failure(s)", file=out)
    return 1 if failures else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        if args.command == "verify":
            return run_verify(args.scope, args.threads, args.expected, out)
        if args.command == "table":
            requests = table_requests(args.table_id)
        elif args.command == "lines-weighted":
            requests = [InvariantRequest("weighted-lines", args.weight)]
        else:
            family = "gw-lines" if args.command == "lines" else "gw-conics"
            a, b = args.incidence
            requests = [InvariantRequest(family, args.dim, (a, b, args.dim - a - b))]
        records = [to_record(r) for r in evaluate_all(requests, args.threads)]
    except ChowError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    out.write(format_records(records, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
