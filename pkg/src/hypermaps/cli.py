"""Command-line front end.

Subcommands: poly, table, count, stirling, avg-trace, verify, bench.
Output goes to stdout unless --out is given.  Exit status is 0 only when
every requested computation or check succeeded; enumeration requests above
the ceiling exit with 2 (override with --force), failed verify checks with 1.

Output is byte-identical across repeated runs with the same configuration,
including under --threads: parallel enumeration shards merge by coefficient
addition, which is order-independent.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .polynomial import BivarPoly, NotDivisible
from .enumeration import (
    DEFAULT_ENUM_CEILING,
    EulerViolation,
    LimitExceeded,
    cycle_pair_counts,
)
from . import closed_form, enumeration, recursion, two_face

TOTAL_THROUGH_13 = 6_749_977_113  # sum of r! for r = 1..13


# table rendering and parsing -------------------------------------------------

Row = Tuple[int, int, int, int]  # (r, e, v, count)


def rows_for_poly(r: int, poly: BivarPoly) -> List[Row]:
    return [(r, e, v, c) for (e, v), c in poly.sorted_terms()]


def render_table_csv(rows: Sequence[Row]) -> str:
    lines = ["r,e,v,count"]
    lines.extend(f"{r},{e},{v},{c}" for (r, e, v, c) in rows)
    return "\n".join(lines) + "\n"


def parse_table_csv(text: str) -> List[Row]:
    lines = text.splitlines()
    if not lines or lines[0] != "r,e,v,count":
        raise ValueError("missing or malformed header, expected 'r,e,v,count'")
    rows = []
    for line in lines[1:]:
        r, e, v, c = line.split(",")
        rows.append((int(r), int(e), int(v), int(c)))
    return rows


def _json_group(rows: Sequence[Row]) -> List[dict]:
    groups: Dict[int, List[dict]] = {}
    for (r, e, v, c) in rows:
        groups.setdefault(r, []).append({"e": e, "v": v, "c": str(c)})
    return [{"r": r, "terms": terms} for r, terms in sorted(groups.items())]


def render_table_json(rows: Sequence[Row]) -> str:
    return json.dumps(_json_group(rows)) + "\n"


def parse_table_json(text: str) -> List[Row]:
    rows: List[Row] = []
    for group in json.loads(text):
        for term in group["terms"]:
            rows.append((int(group["r"]), int(term["e"]), int(term["v"]), int(term["c"])))
    return rows


# argument plumbing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermaps",
        description="Exact generating polynomials counting rooted hypermaps "
        "by darts, edges and vertices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, methods=True, faces=True, ranged=True):
        if ranged:
            p.add_argument("--r", type=int, help="single number of darts")
            p.add_argument("--r-min", type=int, help="start of a dart range")
            p.add_argument("--r-max", type=int, help="end of a dart range (inclusive)")
        if faces:
            p.add_argument("--faces", type=int, choices=(1, 2), default=1)
        if methods:
            p.add_argument(
                "--method",
                choices=("enumerate", "closed", "recursion"),
                help="construction to use (default: closed for a single r, "
                "recursion for a range; two-face output always enumerates)",
            )
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        p.add_argument("--threads", default="1", help="worker processes for enumeration, or 'auto'")
        p.add_argument("--enum-ceiling", type=int, default=DEFAULT_ENUM_CEILING)
        p.add_argument("--force", action="store_true", help="ignore the enumeration ceiling")

    p_poly = sub.add_parser("poly", help="print a generating polynomial")
    common(p_poly)

    p_table = sub.add_parser("table", help="coefficient table (r, e, v, count)")
    common(p_table)

    p_count = sub.add_parser("count", help="total number of maps for given darts")
    common(p_count, methods=False)

    p_stirling = sub.add_parser("stirling", help="unsigned Stirling numbers of the first kind")
    common(p_stirling, methods=False, faces=False)

    p_avg = sub.add_parser("avg-trace", help="exact mean trace power of a random reduced state")
    p_avg.add_argument("--m", type=int, required=True, help="dimension of the subsystem kept by the partial trace")
    p_avg.add_argument("--n", type=int, required=True, help="dimension of the subsystem traced out")
    common(p_avg, methods=False, faces=False, ranged=False)
    p_avg.add_argument("--r", type=int, required=True, help="trace power")

    p_verify = sub.add_parser("verify", help="run the cross-validation suite")
    common(p_verify, methods=False, faces=False, ranged=False)
    p_verify.add_argument("--r-max", type=int, default=9, help="top of the method-agreement range")

    p_bench = sub.add_parser("bench", help="time the constructions (CSV)")
    common(p_bench)
    p_bench.add_argument("--reps", type=int, default=5, help="timed repetitions (median reported)")

    return parser


def _threads(args) -> int:
    if args.threads == "auto":
        return os.cpu_count() or 1
    count = int(args.threads)
    if count < 1:
        raise ValueError("--threads must be at least 1")
    return count


def _ceiling(args) -> Optional[int]:
    if args.force:
        return None
    return args.enum_ceiling


def _r_list(args) -> List[int]:
    if args.r is not None:
        if args.r_min is not None or args.r_max is not None:
            raise ValueError("give either --r or --r-min/--r-max, not both")
        return [args.r]
    if args.r_min is None or args.r_max is None:
        raise ValueError("need --r, or both --r-min and --r-max")
    if args.r_min > args.r_max:
        raise ValueError("--r-min exceeds --r-max")
    return list(range(args.r_min, args.r_max + 1))


def _warn_force(args, rs: Sequence[int]):
    if args.force:
        worst = max(rs)
        work = worst * factorial(worst)
        print(
            f"warning: ceiling override; enumeration at r={worst} is about "
            f"10^{len(str(work)) - 1} cycle operations",
            file=sys.stderr,
        )


def _polys(args, rs: Sequence[int]) -> List[Tuple[int, BivarPoly]]:
    """Resolve (r, polynomial) pairs for the requested faces/method."""
    ceiling = _ceiling(args)
    workers = _threads(args)
    if args.faces == 2:
        _warn_force(args, rs)
        return [
            (r, two_face.two_face_gf(r, ceiling=ceiling, workers=workers).gf)
            for r in rs
        ]
    method = getattr(args, "method", None)
    if method is None:
        method = "closed" if len(rs) == 1 else "recursion"
    if method == "enumerate":
        _warn_force(args, rs)
        return [
            (r, enumeration.one_face_poly(r, ceiling=ceiling, workers=workers))
            for r in rs
        ]
    if method == "closed":
        return [(r, closed_form.one_face_poly(r)) for r in rs]
    top = max(rs)
    wanted = set(rs)
    return [(r, poly) for r, poly in recursion.stream(top) if r in wanted]


# subcommands ------------------------------------------------------------------


def _cmd_poly(args) -> Tuple[str, int]:
    rs = _r_list(args)
    pairs = _polys(args, rs)
    if args.format == "text":
        return "".join(f"{poly.render()}\n" for _, poly in pairs), 0
    rows = [row for r, poly in pairs for row in rows_for_poly(r, poly)]
    if args.format == "csv":
        return render_table_csv(rows), 0
    if len(pairs) == 1:
        return json.dumps(_json_group(rows)[0]) + "\n", 0
    return render_table_json(rows), 0


def _cmd_table(args) -> Tuple[str, int]:
    rs = _r_list(args)
    rows = [row for r, poly in _polys(args, rs) for row in rows_for_poly(r, poly)]
    if args.format == "json":
        return render_table_json(rows), 0
    return render_table_csv(rows), 0


def _cmd_count(args) -> Tuple[str, int]:
    rs = _r_list(args)
    counts = []
    for r in rs:
        if args.faces == 1:
            counts.append((r, factorial(r)))  # every sigma is one rooted map
        else:
            counts.append((r, two_face.two_face_total(r)))
    if args.format == "text" and len(counts) == 1:
        return f"{counts[0][1]}\n", 0
    if args.format == "json":
        objs = [{"r": r, "faces": args.faces, "count": str(c)} for r, c in counts]
        return json.dumps(objs) + "\n", 0
    lines = ["r,faces,count"] + [f"{r},{args.faces},{c}" for r, c in counts]
    return "\n".join(lines) + "\n", 0


def _cmd_stirling(args) -> Tuple[str, int]:
    rs = _r_list(args)
    rows = [(r, closed_form.stirling_row(r)) for r in rs]
    if args.format == "text":
        return "".join(" ".join(str(c) for c in row) + "\n" for _, row in rows), 0
    if args.format == "json":
        objs = [{"r": r, "row": [str(c) for c in row]} for r, row in rows]
        return json.dumps(objs) + "\n", 0
    lines = ["r,k,c"]
    for r, row in rows:
        lines.extend(f"{r},{k},{c}" for k, c in enumerate(row, start=1))
    return "\n".join(lines) + "\n", 0


def _cmd_avg_trace(args) -> Tuple[str, int]:
    value = closed_form.avg_trace_power(args.m, args.n, args.r)
    if args.format == "json":
        obj = {"m": args.m, "n": args.n, "r": args.r, "value": str(value)}
        return json.dumps(obj) + "\n", 0
    if args.format == "csv":
        return f"m,n,r,value\n{args.m},{args.n},{args.r},{value}\n", 0
    return f"{value}\n", 0


def _cmd_bench(args) -> Tuple[str, int]:
    rs = _r_list(args)
    method = args.method or "closed"
    ceiling = _ceiling(args)
    workers = _threads(args)
    if method == "enumerate":
        _warn_force(args, rs)
    resolution_ms = time.get_clock_info("perf_counter").resolution * 1000.0

    def run(r: int) -> BivarPoly:
        if method == "enumerate":
            return enumeration.one_face_poly(r, ceiling=ceiling, workers=workers)
        if method == "closed":
            return closed_form.one_face_poly(r)
        return recursion.one_face_poly(r)

    records = []
    for r in rs:
        poly = run(r)  # warm-up, result reused for the count
        times = []
        for _ in range(max(1, args.reps)):
            t0 = time.perf_counter()
            run(r)
            times.append((time.perf_counter() - t0) * 1000.0)
        ms = statistics.median(times)
        flag = "below_resolution" if ms < resolution_ms else ""
        records.append((method, r, ms, poly.eval_at(1, 1), flag))
    if args.format == "json":
        objs = [
            {"method": mth, "r": r, "ms": round(ms, 3), "count": str(c), "flag": flag}
            for mth, r, ms, c, flag in records
        ]
        return json.dumps(objs) + "\n", 0
    lines = ["method,r,ms,count,flag"]
    lines.extend(f"{mth},{r},{ms:.3f},{c},{flag}" for mth, r, ms, c, flag in records)
    return "\n".join(lines) + "\n", 0


# verify ------------------------------------------------------------------------


def _check_base_cases(ceiling, workers):
    p1 = BivarPoly({(1, 1): 1})
    p2 = BivarPoly({(2, 1): 1, (1, 2): 1})
    for r, expected in ((1, p1), (2, p2)):
        for poly in (
            enumeration.one_face_poly(r, ceiling=ceiling, workers=workers),
            closed_form.one_face_poly(r),
            recursion.one_face_poly(r),
        ):
            if poly != expected:
                return False, f"mismatch at r={r}"
    return True, "P_1 = m*n and P_2 = m^2*n + m*n^2 by all three methods"


def _check_agreement(rmax, ceiling, workers):
    recs = dict(recursion.stream(rmax))
    for r in range(1, rmax + 1):
        if not (
            enumeration.one_face_poly(r, ceiling=ceiling, workers=workers)
            == closed_form.one_face_poly(r)
            == recs[r]
        ):
            return False, f"methods disagree at r={r}"
    return True, f"enumerate = closed = recursion for r = 1..{rmax}"


def _check_totals():
    cumulative = 0
    recs = dict(recursion.stream(13))
    for r in range(1, 14):
        expected = factorial(r)
        if closed_form.one_face_poly(r).eval_at(1, 1) != expected:
            return False, f"closed-form total wrong at r={r}"
        if recs[r].eval_at(1, 1) != expected:
            return False, f"recursion total wrong at r={r}"
        cumulative += expected
    if cumulative != TOTAL_THROUGH_13:
        return False, f"cumulative total {cumulative} != {TOTAL_THROUGH_13}"
    return True, f"P_r(1,1) = r! for r = 1..13; cumulative total {cumulative}"


def _check_stirling(rmax, ceiling, workers):
    for r in range(1, rmax + 1):
        row = closed_form.stirling_row(r)
        marginal = closed_form.one_face_poly(r).substitute_n(1)
        if marginal != {k: c for k, c in enumerate(row, start=1) if c}:
            return False, f"marginal != Stirling row at r={r}"
        histogram: Dict[int, int] = {}
        for (cs, _), count in cycle_pair_counts(
            [r], ceiling=ceiling, workers=workers
        ).items():
            histogram[cs] = histogram.get(cs, 0) + count
        if histogram != {k: c for k, c in enumerate(row, start=1) if c}:
            return False, f"cycle histogram != Stirling row at r={r}"
    return True, f"P_r(m,1) matches Stirling row and cycle histogram for r = 1..{rmax}"


def _check_symmetry_parity(rmax=20):
    for r, poly in recursion.stream(rmax):
        if poly != poly.swap_vars():
            return False, f"not symmetric at r={r}"
        for (e, v), _ in poly.sorted_terms():
            if e < 1 or v < 1 or e + v > r + 1 or (e + v - r - 1) % 2:
                return False, f"bad monomial m^{e}*n^{v} at r={r}"
    return True, f"m<->n symmetry and Euler parity for r = 1..{rmax}"


def _check_certificate(rmax=8):
    for r in range(1, rmax + 1):
        for k in range(-1, r + 3):
            if not recursion.verify_certificate(r, k):
                return False, f"certificate fails at (r={r}, k={k})"
        if not recursion.telescoping_check(r):
            return False, f"telescoping fails at r={r}"
    return True, f"recurrence certificate and telescoping hold for r = 1..{rmax}, k = -1..r+2"


def _check_quantum(m_max=8, n_max=8, r_max=12):
    one = closed_form.avg_trace_power(1, 1, 5)
    if one != 1:
        return False, "m=n=1 should give exactly 1"
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for r in range(1, r_max + 1):
                a = closed_form.avg_trace_power(m, n, r)
                b = closed_form.avg_trace_power_alt(m, n, r)
                if a != b:
                    return False, f"routes disagree at (m={m}, n={n}, r={r})"
                if (r == 1 or (m == 1 and n == 1)) and a != 1:
                    return False, f"unit-trace case not 1 at (m={m}, n={n}, r={r})"
    return True, f"polynomial and truncated-sum routes agree for m,n <= {m_max}, r <= {r_max}"


def _check_two_face(rmax, ceiling, workers):
    expected_small = {2: 1, 3: 6, 4: 34}
    for r in range(2, rmax + 1):
        result = two_face.two_face_gf(r, ceiling=ceiling, workers=workers)
        oracle = two_face.connected_two_face_oracle(r, ceiling=ceiling, workers=workers)
        if result.gf != oracle:
            return False, f"subtraction route != transitive oracle at r={r}"
        if result.total != two_face.two_face_total(r):
            return False, f"total != closed formula at r={r}"
        if r in expected_small and result.total != expected_small[r]:
            return False, f"total at r={r} is {result.total}"
    return True, f"subtraction route = transitive oracle and totals match for r = 2..{rmax}"


def _cmd_verify(args) -> Tuple[str, int]:
    ceiling = _ceiling(args)
    workers = _threads(args)
    rmax = args.r_max
    checks = [
        ("base-cases", lambda: _check_base_cases(ceiling, workers)),
        ("method-agreement", lambda: _check_agreement(rmax, ceiling, workers)),
        ("totals", _check_totals),
        ("stirling-marginal", lambda: _check_stirling(min(8, rmax), ceiling, workers)),
        ("symmetry-parity", _check_symmetry_parity),
        ("certificate", _check_certificate),
        ("quantum-moments", _check_quantum),
        ("two-face", lambda: _check_two_face(min(8, rmax), ceiling, workers)),
    ]
    lines = []
    passed = 0
    for name, fn in checks:
        ok, detail = fn()
        passed += ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    lines.append(f"verify: {passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", 0 if passed == len(checks) else 1


# entry point --------------------------------------------------------------------

_HANDLERS = {
    "poly": _cmd_poly,
    "table": _cmd_table,
    "count": _cmd_count,
    "stirling": _cmd_stirling,
    "avg-trace": _cmd_avg_trace,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = _HANDLERS[args.command](args)
    except LimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotDivisible, EulerViolation) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
