"""Command-line front end.

Subcommands: check, gen {pyth|iso-a|iso-b|f1|f2}, verify {prop1|prop2|theorem1},
paper-tables.  Output formats: table, csv, json, markdown.  Exit codes:
0 success/pass, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from typing import Dict, List, Optional, Sequence

from . import exact, families, oracle

SCHEMA_VERSION = "1"
GENERATED_BY = "exradii"
FORMATS = ("table", "csv", "json", "markdown")
ISO_COLUMNS = [
    "source", "K_or_L", "m", "n", "alpha", "beta",
    "rho_beta", "rho_alpha", "area", "height", "perimeter",
]
PYTH_COLUMNS = [
    "source", "delta", "m", "n", "alpha", "beta", "gamma",
    "rho_alpha", "rho_beta", "rho_gamma", "area", "perimeter",
]
PAPER_MN_PAIRS = [(1, 2), (1, 4), (1, 6), (2, 3), (2, 5), (3, 4), (4, 5), (5, 6)]


def render_rows(rows: List[Dict[str, object]], columns: List[str], fmt: str) -> str:
    cells = [[str(row.get(col, "")) for col in columns] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(cells)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "generated_by": GENERATED_BY,
            "rows": [{col: row.get(col, "") for col in columns} for row in rows],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)
    widths = [max(len(col), *(len(r[i]) for r in cells)) if cells else len(col)
              for i, col in enumerate(columns)]
    if fmt == "markdown":
        lines = ["| " + " | ".join(col.ljust(w) for col, w in zip(columns, widths)) + " |"]
        lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
        for r in cells:
            lines.append("| " + " | ".join(v.ljust(w) for v, w in zip(r, widths)) + " |")
        return "\n".join(lines)
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _parse_source_params(source: str) -> Dict[str, object]:
    """Pull scale/m/n out of the first provenance tag of a record."""
    m = re.search(r"\((?:K=(\d+)|L=(\d+)|delta=(\d+)),m=(\d+),n=(\d+)\)", source)
    if not m:
        return {"K_or_L": "", "m": "", "n": ""}
    scale = next(g for g in m.groups()[:3] if g is not None)
    return {"K_or_L": int(scale), "m": int(m.group(4)), "n": int(m.group(5))}


def iso_row(rec: families.IsoTriangleRecord, **overrides: object) -> Dict[str, object]:
    row: Dict[str, object] = {
        "source": rec.source,
        "alpha": rec.alpha,
        "beta": rec.beta,
        "rho_beta": str(rec.rho_beta),
        "rho_alpha": str(rec.rho_alpha),
        "area": rec.area,
        "height": rec.h,
        "perimeter": rec.perimeter,
    }
    row.update(_parse_source_params(rec.source))
    row.update(overrides)
    return row


def cmd_check(args: argparse.Namespace) -> int:
    t = exact.triangle_validate(args.a, args.b, args.c)
    m = exact.metrics(t)
    rows = [
        {"field": "sides", "value": f"({t.a}, {t.b}, {t.c})"},
        {"field": "perimeter", "value": t.perimeter},
        {"field": "s", "value": str(m.s)},
        {"field": "area", "value": str(m.area)},
        {"field": "heron", "value": "yes" if m.area.is_integer else "no"},
        {"field": "cos_A", "value": str(m.cos_a)},
        {"field": "cos_B", "value": str(m.cos_b)},
        {"field": "cos_C", "value": str(m.cos_c)},
    ]
    for label in ("a", "b", "c"):
        rho = m.rho(label)
        flag = "integral" if rho.is_integer else ("rational" if rho.is_rational else "irrational")
        rows.append({"field": f"rho_{label}", "value": f"{rho} ({flag})"})
    print(render_rows(rows, ["field", "value"], args.format))
    return 0


def _gen_pyth_rows(args: argparse.Namespace) -> List[Dict[str, object]]:
    if args.m is None or args.n is None:
        raise families.ParamError("gen pyth requires --m and --n")
    p = families.PythParams(
        families.mn_validate(args.m, args.n), args.delta, args.swap_legs
    )
    t = families.gen_pythagorean(p)
    rho_a, rho_b, rho_c = families.pyth_exradii(p)
    area = t.b * t.c // 2
    return [{
        "source": f"pyth(delta={args.delta},m={args.m},n={args.n})",
        "delta": args.delta, "m": args.m, "n": args.n,
        "alpha": t.a, "beta": t.b, "gamma": t.c,
        "rho_alpha": rho_a, "rho_beta": rho_b, "rho_gamma": rho_c,
        "area": area, "perimeter": t.perimeter,
    }]


def _gen_iso_rows(args: argparse.Namespace) -> List[Dict[str, object]]:
    fam = args.family
    if args.max_perimeter is not None:
        if fam in ("iso-a", "iso-b"):
            tag = "iso-A(" if fam == "iso-a" else "iso-B("
            recs = [r for r in families.enumerate_heron_isosceles(args.max_perimeter)
                    if tag in r.source]
        else:
            letter = "F1(" if fam == "f1" else "F2("
            recs = [r for r in families.enumerate_f1_f2(args.max_perimeter)
                    if letter in r.source]
        return [iso_row(r) for r in recs]

    scale = args.K if fam == "f1" else args.L if fam == "f2" else args.delta
    if args.range_mn is not None:
        pairs = [(n, m) for n in range(1, args.range_mn)
                 for m in range(n + 1, args.range_mn + 1)
                 if families.mn_is_valid(m, n)]
    elif args.m is not None and args.n is not None:
        pairs = [(args.n, args.m)]
    else:
        raise families.ParamError(
            f"gen {fam} needs --m/--n, --range-mn, or --max-perimeter"
        )
    rows = []
    for n, m in pairs:
        mn = families.mn_validate(m, n)
        if fam == "f1":
            rec = families.gen_f1(families.F1Params(scale, mn))
        elif fam == "f2":
            rec = families.gen_f2(families.F2Params(scale, mn))
        else:
            variant = "A" if fam == "iso-a" else "B"
            rec = families.gen_heron_isosceles(families.IsoFamily(variant, mn, scale))
        rows.append(iso_row(rec))
    rows.sort(key=lambda r: (r["perimeter"], r["alpha"]))
    return rows


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "pyth":
        rows = _gen_pyth_rows(args)
        print(render_rows(rows, PYTH_COLUMNS, args.format))
    else:
        rows = _gen_iso_rows(args)
        print(render_rows(rows, ISO_COLUMNS, args.format))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    progress = None
    if args.progress:
        def progress(done: int, total: int) -> None:
            print(f"  scanned alpha {done}/{total}", file=sys.stderr)
    if args.target == "prop1":
        report = oracle.verify_prop1(
            args.max_perimeter, threads=args.threads, progress=progress
        )
        rows = [{
            "target": "prop1", "bound": report.bound,
            "heron_isosceles": len(report.oracle_set),
            "violations": len(report.prop1_violations),
            "elapsed_s": f"{report.elapsed:.3f}",
            "verdict": "PASS" if report.passed else "FAIL",
        }]
    else:
        report = oracle.verify_completeness(
            args.max_perimeter, args.target, threads=args.threads, progress=progress
        )
        rows = [{
            "target": report.target, "bound": report.bound,
            "oracle_count": len(report.oracle_set),
            "family_count": len(report.family_set),
            "missing_from_family": len(report.missing_from_family),
            "extra_in_family": len(report.extra_in_family),
            "elapsed_s": f"{report.elapsed:.3f}",
            "verdict": "PASS" if report.passed else "FAIL",
        }]
    print(render_rows(rows, list(rows[0].keys()), args.format))
    if not report.passed:
        for key in sorted(report.missing_from_family):
            print(f"missing from family: {key}", file=sys.stderr)
        for key in sorted(report.extra_in_family):
            print(f"extra in family: {key}", file=sys.stderr)
        for key in report.prop1_violations:
            print(f"violation: {key}", file=sys.stderr)
    return 0 if report.passed else 1


def paper_table_rows(verbatim_labels: bool = False) -> List[Dict[str, object]]:
    """The two published example tables, 8 rows each, in publication order.

    The second family's rows are labeled L=1 (its scale parameter); with
    `verbatim_labels` they reproduce the printed K=1 labels instead.
    """
    rows: List[Dict[str, object]] = []
    for n, m in PAPER_MN_PAIRS:
        rec = families.gen_f1(families.F1Params(1, families.MNPair(m, n)))
        rows.append(iso_row(rec, params=f"K=1, n={n}, m={m}", family="F1"))
    for n, m in PAPER_MN_PAIRS:
        rec = families.gen_f2(families.F2Params(1, families.MNPair(m, n)))
        letter = "K" if verbatim_labels else "L"
        rows.append(iso_row(rec, params=f"{letter}=1, n={n}, m={m}", family="F2"))
    return rows


def cmd_paper_tables(args: argparse.Namespace) -> int:
    rows = paper_table_rows(args.verbatim_labels)
    if args.format in ("csv", "json"):
        print(render_rows(rows, ["family", "params"] + ISO_COLUMNS, args.format))
        return 0
    display_cols = ["params", "alpha", "beta=gamma", "rho_beta=rho_gamma", "rho_alpha"]
    for family in ("F1", "F2"):
        fam_rows = [{
            "params": r["params"], "alpha": r["alpha"], "beta=gamma": r["beta"],
            "rho_beta=rho_gamma": r["rho_beta"], "rho_alpha": r["rho_alpha"],
        } for r in rows if r["family"] == family]
        print(f"Family {family}")
        print(render_rows(fam_rows, display_cols, args.format))
        if family == "F1":
            print()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exradii",
        description="Exact exradius computations for Heron isosceles triangles "
                    "and Pythagorean triples.",
    )
    parser.add_argument(
        "--format", choices=FORMATS,
        default=os.environ.get("EXRADII_FORMAT", "table"),
        help="output format (default: table, or $EXRADII_FORMAT)",
    )
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for verification scans")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="exact metrics of one triangle")
    p_check.add_argument("a", type=int)
    p_check.add_argument("b", type=int)
    p_check.add_argument("c", type=int)
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="generate family members")
    p_gen.add_argument("family", choices=("pyth", "iso-a", "iso-b", "f1", "f2"))
    p_gen.add_argument("--m", type=int)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--delta", type=int, default=1)
    p_gen.add_argument("--K", type=int, default=1, dest="K")
    p_gen.add_argument("--L", type=int, default=1, dest="L")
    p_gen.add_argument("--range-mn", type=int,
                       help="emit all valid (m, n) pairs with n < m <= N")
    p_gen.add_argument("--max-perimeter", type=int,
                       help="enumerate all members up to this perimeter")
    p_gen.add_argument("--swap-legs", action="store_true",
                       help="pyth only: use beta = delta(m^2-n^2)")
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="brute-force verification sweeps")
    p_verify.add_argument("target", choices=("prop1", "prop2", "theorem1"))
    p_verify.add_argument("--max-perimeter", type=int, required=True)
    p_verify.add_argument("--progress", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_tables = sub.add_parser("paper-tables",
                              help="the two published 8-row example tables")
    p_tables.add_argument("--verbatim-labels", action="store_true",
                          help="reproduce the printed K=1 labels in family 2")
    p_tables.set_defaults(func=cmd_paper_tables)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (exact.TriangleError, families.ParamError,
            families.InvalidBoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
