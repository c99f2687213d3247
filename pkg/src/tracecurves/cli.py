"""Command line interface: ``tracecurves table|ghw|verify|combine``.

Exit codes: 0 success, 1 failed cross-check, 2 usage error, 3 cost guard refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time

from . import __version__
from .builder import (
    PRESETS,
    NoSubcodeError,
    build_preset_system,
    count_solutions_exhaustive,
    fiber_structure_check,
    min_weight_subcode,
    select_representatives,
)
from .codes import (
    GHW_MAX_OPS,
    MIN_WEIGHT_MAX_OPS,
    TraceCode,
    ghw_exhaustive,
    ghw_from_min_subcode,
    is_min_weight_subcode,
    min_weight_exhaustive,
    min_weight_formula,
    word_of,
)
from .combinations import (
    subfield_pair_subcode,
    three_pair_split,
    two_pair_split,
    vanishing_monomial_subcode,
)
from .curves import (
    REFERENCE_INTERVALS,
    affine_point_count_oracle,
    case_h,
    case_of,
    curve_of,
    fibre_product,
    row_formula,
)
from .errors import ConsistencyError, CostGuardError
from .f2linalg import rank_of
from .field import FieldError, GF2m
from .linearized import LinearizedPoly
from .quadratic import ODD_RANK, QuadraticForm, classify, zeros_for

SCHEMA = 1
QUICK_D1_OPS = 1 << 22

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class CheckFailure(Exception):
    pass


# ---- output


def emit(report: dict, columns: list[str], fmt: str, out) -> None:
    rows = report.get("rows", [])
    if fmt == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c)) for c in columns])
        out.write(buf.getvalue())
    else:
        for key, value in report.items():
            if key not in ("rows", "checks", "command", "schema"):
                out.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
        cells = [[_cell(row.get(c)) for c in columns] for row in rows]
        widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
        out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
        if "check" in columns:
            return
        for name, ok in report.get("checks", {}).items():
            out.write(f"[{'PASS' if ok else 'FAIL'}] {name}\n")


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _field(args) -> GF2m:
    try:
        return GF2m(args.m, None if args.modulus is None else int(args.modulus, 16))
    except (FieldError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _base_report(args, field: GF2m) -> dict:
    return {"schema": SCHEMA, "command": args.argv, "field": field.to_json()}


# ---- table


def cmd_table(args) -> tuple[dict, list[str]]:
    field = _field(args)
    m, h = field.m, args.h
    if args.case is not None:
        try:
            if case_h(args.case, m) != h:
                raise UsageError(f"case {args.case} at m={m} means h={case_h(args.case, m)}, not {h}")
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    try:
        sys_ = build_preset_system(field, h, args.preset)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    case = case_of(m, h)
    report = _base_report(args, field)
    report["params"] = {"h": h, "case": case, "family": _family(m, case)}
    report["system"] = sys_.to_json()
    rows, checks = [], {}
    d1 = min_weight_formula(m, h)
    if sys_.max_r < 1:
        report["note"] = "no subcode constructible: dim V - M <= 0"
    else:
        checks["fibre structure of solution space"] = fiber_structure_check(sys_)
        for r in range(1, sys_.max_r + 1):
            D = min_weight_subcode(sys_, r)
            curve = fibre_product(D)
            closed = row_formula(m, h, r)
            agree = (curve.genus, curve.n_points) == (closed.genus, closed.n_points)
            checks[f"r={r} constructed curve matches closed form"] = agree
            rows.append({
                "q": field.q, "m": m, "family": report["params"]["family"], "r": r,
                "d_r": ghw_from_min_subcode(d1, r),
                "genus": curve.genus, "n_points": curve.n_points,
                "serre_bound": curve.serre_bound,
                "attains": "hasse-weil" if curve.attains_hasse_weil
                else "serre" if curve.attains_serre else "none",
                "reference": REFERENCE_INTERVALS.get((field.q, curve.genus)),
            })
    report["rows"] = rows
    report["checks"] = checks
    if not all(checks.values()):
        raise CheckFailure(report)
    return report, ["r", "d_r", "genus", "n_points", "serre_bound", "attains", "reference"]


def _family(m: int, case: str | None) -> str:
    parity = "odd" if m % 2 else "even"
    return f"{parity}-{case}" if case else f"{parity}-generic"


# ---- ghw


def cmd_ghw(args) -> tuple[dict, list[str]]:
    field = _field(args)
    m, h = field.m, args.h
    try:
        code = TraceCode(field, h)
        sys_ = build_preset_system(field, h, args.preset)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = _base_report(args, field)
    report["params"] = {"h": h, "exhaustive": args.exhaustive}
    report["code_dimension"] = code.dimension
    report["system"] = sys_.to_json()
    checks = {}
    d1 = min_weight_formula(m, h)
    budget = args.max_ops or MIN_WEIGHT_MAX_OPS
    if not args.exhaustive:
        budget = min(budget, QUICK_D1_OPS)
    try:
        d1_ex = min_weight_exhaustive(code, budget, jobs=args.jobs)
    except CostGuardError:
        if args.exhaustive:
            raise
        d1_ex = None
    except ConsistencyError as exc:
        report["error"] = str(exc)
        raise CheckFailure(report) from exc
    report["d1_exhaustive"] = d1_ex
    if d1_ex is not None:
        checks["d_1 exhaustive sweep equals closed form"] = d1_ex == d1
    rows = []
    max_r = max(sys_.max_r, 0)
    witness = None
    for r in range(1, max_r + 1):
        D = min_weight_subcode(sys_, r)
        ok = is_min_weight_subcode(D, d1)
        checks[f"r={r} witness subcode has all words of weight d_1"] = ok
        witness = D
        row = {"r": r, "d_r": ghw_from_min_subcode(d1, r), "witness": "constructed", "d_r_exhaustive": None}
        if args.exhaustive:
            try:
                row["d_r_exhaustive"] = ghw_exhaustive(code, r, args.max_ops or GHW_MAX_OPS)
                checks[f"r={r} exhaustive d_r equals ladder"] = row["d_r_exhaustive"] == row["d_r"]
            except CostGuardError as exc:
                row["d_r_exhaustive"] = None
                report.setdefault("skipped", []).append(f"r={r}: {exc}")
        rows.append(row)
    if witness is not None:
        report["witness"] = witness.to_json()
        report["witness_b"] = [[f"{x:#x}" for x in b] for b in select_representatives(sys_, max_r)]
    report["rows"] = rows
    report["checks"] = checks
    if not all(checks.values()):
        raise CheckFailure(report)
    return report, ["r", "d_r", "d_r_exhaustive", "witness"]


# ---- verify


def cmd_verify(args) -> tuple[dict, list[str]]:
    if args.m > 12 or (args.deep and args.m > 9):
        raise UsageError("verify supports m <= 12 (m <= 9 with --deep)")
    field = _field(args)
    m, q = field.m, field.q
    rng = random.Random(args.seed)
    samples = 200 if args.deep else 50
    checks: dict[str, bool] = {}
    report = _base_report(args, field)
    report["params"] = {"deep": args.deep, "seed": args.seed, "samples": samples}

    trich = weight_ok = radical_ok = curve_ok = True
    for h in range(0, m // 2 + 1):
        for _ in range(samples):
            R = LinearizedPoly(field, [rng.randrange(q) for _ in range(h + 1)])
            Q = QuadraticForm.from_R(R)
            try:
                c = classify(Q)
            except ConsistencyError:
                trich = False
                continue
            options = {zeros_for(m, c.w, k) for k in ("hyperbolic", "elliptic")} | {q // 2}
            trich &= c.zeros in options
            radical_ok &= (c.rank == m - c.w) == (c.w0 == c.w) and c.w0 in (c.w, c.w - 1)
            radical_ok &= c.kind != ODD_RANK or c.rank == m - c.w + 1
            weight_ok &= word_of(R).weight == q - c.zeros
            if not R.is_zero():
                curve_ok &= curve_of(R).n_points == affine_point_count_oracle(R) + 1
    checks["classification zero count is one of the three closed forms"] = trich
    checks["rank/radical dichotomy"] = radical_ok
    checks["word weight = q - zeros"] = weight_ok
    checks["curve points = affine enumeration + 1"] = curve_ok

    for h in range(1, (m + 1) // 2):
        try:
            sys_ = build_preset_system(field, h)
        except ValueError:
            continue
        tag = f"h={h}"
        if m % 2:
            checks[f"{tag} dim S >= m"] = sys_.S.dim >= m
        checks[f"{tag} fibre structure of solutions"] = fiber_structure_check(sys_)
        if args.deep and sys_.S.dim <= 14:
            ok = True
            for v in sys_.S.elements():
                b = sys_.solution(v)
                if rank_of(list(sys_.a) + b[:1]) == sys_.M + 1:
                    ok &= rank_of(list(sys_.a) + b) == 2 * sys_.M
            checks[f"{tag} rank M+1 on b_1 forces rank 2M on all of S"] = ok
            if q ** sys_.M <= 1 << 20:
                checks[f"{tag} |S| by enumeration"] = count_solutions_exhaustive(sys_) == 1 << sys_.S.dim
        if sys_.max_r >= 1:
            try:
                D = min_weight_subcode(sys_, sys_.max_r)
                fibre_product(D)
                checks[f"{tag} subcode r={sys_.max_r}: min weight and point count identities"] = True
            except ConsistencyError:
                checks[f"{tag} subcode r={sys_.max_r}: min weight and point count identities"] = False
    if args.deep and m == 9:
        sys_ = build_preset_system(field, 2, "subfield-F8")
        checks["subfield-F8 triple gives dim S = 12"] = sys_.S.dim == 12
    if args.deep:
        for h in range(1, (m + 1) // 2):
            code = TraceCode(field, h)
            if q ** (h + 1) <= QUICK_D1_OPS:
                try:
                    checks[f"h={h} exhaustive d_1"] = min_weight_exhaustive(code) == min_weight_formula(m, h)
                except ConsistencyError:
                    checks[f"h={h} exhaustive d_1"] = False
    report["rows"] = [{"check": k, "ok": v} for k, v in checks.items()]
    report["checks"] = checks
    if not all(checks.values()):
        raise CheckFailure(report)
    return report, ["check", "ok"]


# ---- combine


def cmd_combine(args) -> tuple[dict, list[str]]:
    field = _field(args)
    m = field.m
    builders = {}
    if m % 2 and m >= 5:
        builders["two-pair-split"] = two_pair_split
    if m % 2 and m >= 7:
        builders["three-pair-split"] = three_pair_split
    if m == 6:
        builders["subfield-pairs"] = subfield_pair_subcode
        builders["vanishing-monomial"] = vanishing_monomial_subcode
    if not builders:
        raise UsageError(f"no combination constructions available for m={m}")
    report = _base_report(args, field)
    rows = []
    for name, fn in builders.items():
        D = fn(field)
        c = fibre_product(D)
        rows.append({
            "construction": name, "r": D.r, "word_dim": D.word_dimension,
            "genus": c.genus, "n_points": c.n_points, "serre_bound": c.serre_bound,
            "reference": REFERENCE_INTERVALS.get((field.q, c.genus)),
        })
    report["rows"] = rows
    return report, ["construction", "r", "word_dim", "genus", "n_points", "serre_bound", "reference"]


# ---- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tracecurves", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--modulus", help="irreducible modulus as hex bitmask (default: smallest)")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--timing", action="store_true", help="include wall time in the report")

    t = sub.add_parser("table", help="curves from minimum weight subcodes")
    common(t)
    t.add_argument("--h", type=int, required=True)
    t.add_argument("--case", choices=("I", "II", "III"))
    t.add_argument("--preset", choices=PRESETS)
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("ghw", help="generalized Hamming weights of C_h")
    common(g)
    g.add_argument("--h", type=int, required=True)
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--preset", choices=PRESETS)
    g.add_argument("--max-ops", type=int, default=None)
    g.add_argument("--jobs", type=int, default=1)
    g.set_defaults(func=cmd_ghw)

    v = sub.add_parser("verify", help="run the invariant suite for one field")
    common(v)
    v.add_argument("--deep", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("combine", help="fibre products of split pair-form words")
    common(c)
    c.set_defaults(func=cmd_combine)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.argv = argv
    start = time.perf_counter()
    try:
        report, columns = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CostGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CheckFailure as exc:
        report = exc.args[0]
        failed = [k for k, ok in report.get("checks", {}).items() if not ok]
        print("cross-check failed: " + "; ".join(failed or [report.get("error", "unknown")]), file=sys.stderr)
        return EXIT_CHECK
    except (ConsistencyError, NoSubcodeError) as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - start, 3)
    emit(report, columns, args.format, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
