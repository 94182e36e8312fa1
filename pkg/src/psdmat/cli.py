"""Command-line interface.

Verbs: analyze, construct, build, search, bound, tables, selftest,
classify, spectrum, soptimality, cyclotomy.  Every verb takes
--format text|record (record emits JSON).  Exit codes: 0 success,
1 verification mismatch, 2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance as accept
from .bordering import build_good_matrix
from .constructions import FAMILIES, PROMISED_CLASS, ConstructionSpec, generate
from .cyclotomy import cyclotomic_classes, cyclotomic_number_table
from .designs import (
    ResidueSet,
    bv_bound,
    classify,
    difference_spectrum,
    is_special,
    soptimality,
    special_bound,
)
from .matrix import BinaryMatrix, profile, skirlo_bound
from .search import SearchSpace, exhaustive_search

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _emit(record: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "record":
        print(json.dumps(record, indent=2))
    else:
        for line in text_lines:
            print(line)


def _profile_lines(prof) -> list[str]:
    lines = [
        f"peak: {prof.peak}",
        f"sidelobe: {prof.nearest_sidelobe}",
        f"d1: {prof.d1}",
        f"profile: {prof.notation()}",
        "histogram:",
    ]
    lines += [f"  distance {d}: {c}" for d, c in sorted(prof.histogram.items())]
    return lines


def _spec_from_args(args) -> ConstructionSpec:
    family = args.family
    if args.with_zero:
        if family == "quartic":
            family = "quartic-plus0"
        elif family not in ("quartic-plus0", "qr-plus0"):
            raise ValueError(f"--with-zero is not meaningful for family {family!r}")
    return ConstructionSpec(
        family, p=args.p, t=args.t, index=args.i, with_zero=family.endswith("plus0")
    )


def cmd_analyze(args) -> int:
    try:
        with open(args.path) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    R = BinaryMatrix.from_text(text)
    prof = profile(R)
    _emit(prof.to_record(), _profile_lines(prof), args.format)
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec_from_args(args)
    D = generate(spec)
    design = classify(D)
    special = is_special(D)
    cls = soptimality(D) if special else None
    promised = PROMISED_CLASS[spec.family]
    ok = special and cls == promised
    record = {
        "family": spec.family,
        "set": D.to_text(),
        "design": str(design),
        "special": special,
        "s_optimality": cls,
        "promised": promised,
        "verified": ok,
    }
    lines = [
        D.to_text(),
        f"design: {design}",
        f"special: {special}",
        f"s-optimality: {cls} (promised {promised})",
        f"verified: {ok}",
    ]
    _emit(record, lines, args.format)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_build(args) -> int:
    spec = _spec_from_args(args)
    result = build_good_matrix(spec, verify=False)
    record = {
        "family": spec.family,
        "set": result.defining_set.to_text(),
        "interior_class": result.opt_class,
        "punctures": [list(c) for c in result.bordered.punctures],
        "matrix": result.matrix.to_text(),
        "predicted_d1": result.predicted_d1,
        "measured_d1": result.profile.d1,
        "unit_shift_distance": result.unit_distance,
        "verified": result.matches,
        "profile": result.profile.to_record(),
    }
    lines = [
        result.matrix.to_text().rstrip("\n"),
        f"defining set: {result.defining_set.to_text()}",
        f"interior: {result.opt_class}",
        f"punctures: {sorted(result.bordered.punctures)}",
        f"predicted d1: {result.predicted_d1}",
        f"measured d1: {result.profile.d1}",
        f"unit-shift distance: {result.unit_distance}",
        f"profile: {result.profile.notation()}",
        f"verified: {result.matches}",
    ]
    _emit(record, lines, args.format)
    return EXIT_OK if result.matches else EXIT_MISMATCH


def cmd_search(args) -> int:
    space = SearchSpace(args.rows, args.cols, symmetric=args.symmetric, ones=args.ones)
    result = exhaustive_search(
        space,
        prune=not args.no_prune,
        workers=args.workers,
        witness_cap=args.witness_cap,
    )
    record = {
        "rows": args.rows,
        "cols": args.cols,
        "symmetric": args.symmetric,
        "ones": args.ones,
        "explored": result.explored,
        "best_profile": result.best_profile.to_record(),
        "witness_total": result.witness_total,
        "witnesses": [w.to_text() for w in result.witnesses],
    }
    lines = [
        f"explored: {result.explored}",
        f"best profile: {result.best_profile.notation()}"
        f" (peak {result.best_profile.peak}, d1 {result.best_profile.d1})",
        f"witnesses: {result.witness_total}"
        + (f" (showing {len(result.witnesses)})" if result.witness_total > len(result.witnesses) else ""),
    ]
    for w in result.witnesses:
        lines.append(w.to_text().rstrip("\n"))
        lines.append("")
    _emit(record, lines, args.format)
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.v is not None:
        record = {"v": args.v, "bv": bv_bound(args.v), "special_bound": special_bound(args.v)}
        lines = [f"B_{args.v} = {record['bv']}", f"special bound = {record['special_bound']}"]
    else:
        if args.rows is None or args.cols is None or args.ones is None:
            raise ValueError("need either --v or all of --rows, --cols, --ones")
        b = skirlo_bound(args.rows, args.cols, args.ones)
        record = {"rows": args.rows, "cols": args.cols, "ones": args.ones, "d1_bound": b}
        lines = [f"d1 <= {b} for {args.rows}x{args.cols} matrices with {args.ones} ones"]
    _emit(record, lines, args.format)
    return EXIT_OK


def cmd_classify(args) -> int:
    D = ResidueSet.from_text(args.set)
    design = classify(D)
    record = {"set": D.to_text(), "design": str(design), "kind": design.kind,
              "v": design.v, "k": design.k, "lambda": design.lam, "t": design.t}
    _emit(record, [f"{D.to_text()} -> {design}"], args.format)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    D = ResidueSet.from_text(args.set)
    spec = difference_spectrum(D)
    record = {
        "set": D.to_text(),
        "levels": list(spec.levels),
        "level_counts": list(spec.level_counts),
        "lambda": spec.lambda_max,
        "periodic_distance": spec.periodic_distance,
        "consecutive_pairs": spec.consecutive_pairs,
        "multiplicity": {str(g): m for g, m in sorted(spec.multiplicity.items())},
    }
    lines = [
        D.to_text(),
        f"levels: {list(spec.levels)} with counts {list(spec.level_counts)}",
        f"lambda: {spec.lambda_max}",
        f"periodic distance: {spec.periodic_distance}",
        f"consecutive pairs: {spec.consecutive_pairs}",
    ]
    _emit(record, lines, args.format)
    return EXIT_OK


def cmd_soptimality(args) -> int:
    D = ResidueSet.from_text(args.set)
    cls = soptimality(D)
    record = {
        "set": D.to_text(),
        "class": cls,
        "bv": bv_bound(D.v),
        "special_bound": special_bound(D.v),
    }
    _emit(record, [f"{D.to_text()} -> {cls}"], args.format)
    return EXIT_OK


def cmd_cyclotomy(args) -> int:
    ctx = cyclotomic_classes(args.p, args.e, args.gamma)
    table = cyclotomic_number_table(ctx)
    record = {
        "p": ctx.p,
        "e": ctx.e,
        "f": ctx.f,
        "gamma": ctx.gamma,
        "classes": [sorted(c) for c in ctx.classes],
        "numbers": [[table[(i, j)] for j in range(ctx.e)] for i in range(ctx.e)],
    }
    lines = [f"p={ctx.p} e={ctx.e} f={ctx.f} gamma={ctx.gamma}"]
    for i, c in enumerate(ctx.classes):
        lines.append(f"C_{i}: {sorted(c)}")
    lines.append("cyclotomic numbers (i,j):")
    for i in range(ctx.e):
        lines.append("  " + " ".join(f"{table[(i, j)]:3d}" for j in range(ctx.e)))
    _emit(record, lines, args.format)
    return EXIT_OK


def cmd_tables(args) -> int:
    from .tables import run_table1, run_table2

    rows1, rows2 = run_table1(), run_table2()
    record = {
        "table1": [
            {
                "label": r.label,
                "family": r.spec.describe(),
                "params": r.params_actual,
                "params_expected": r.params_expected,
                "reference_d1": r.reference_d1,
                "measured_d1": r.measured_d1,
                "unit_shift_distance": r.unit_distance,
                "passed": r.passed,
            }
            for r in rows1
        ],
        "table2": [
            {
                "label": r.label,
                "formula_d1": r.reference_d1,
                "measured_d1": r.measured_d1,
                "unit_shift_distance": r.unit_distance,
                "passed": r.passed,
            }
            for r in rows2
        ],
    }
    lines = []
    for r in rows1 + rows2:
        status = "ok" if r.passed else "MISMATCH"
        lines.append(
            f"[{status}] {r.label}: reference d1 {r.reference_d1},"
            f" measured {r.measured_d1} (unit-shift {r.unit_distance})"
        )
    _emit(record, lines, args.format)
    return EXIT_OK if all(r.passed for r in rows1 + rows2) else EXIT_MISMATCH


def cmd_selftest(args) -> int:
    numbers = [int(x) for x in args.only.split(",")] if args.only else None
    results = accept.run_acceptance(numbers)
    for res in results:
        print(res.line())
        if args.verbose:
            for d in res.details:
                print(f"    {d}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_MISMATCH


def _add_format(p) -> None:
    p.add_argument("--format", choices=("text", "record"), default="text")


def _add_family(p) -> None:
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--p", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--with-zero", action="store_true", dest="with_zero")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psdmat",
        description="Binary matrices with good aperiodic peak-sidelobe distances",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="profile a matrix file ('M N' header, then 0/1 rows)")
    p.add_argument("path")
    _add_format(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("construct", help="generate and verify a defining set")
    _add_family(p)
    _add_format(p)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("build", help="run the border-and-puncture pipeline")
    _add_family(p)
    _add_format(p)
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("search", help="exhaustive search for optimal matrices")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--ones", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witness-cap", type=int, default=16)
    p.add_argument("--no-prune", action="store_true")
    _add_format(p)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("bound", help="B_v / special bound, or the d1 bound from dimensions and ones")
    p.add_argument("--v", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--ones", type=int)
    _add_format(p)
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("classify", help="classify a residue set 'v: e1,e2,...'")
    p.add_argument("--set", required=True)
    _add_format(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("spectrum", help="difference spectrum of a residue set")
    p.add_argument("--set", required=True)
    _add_format(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("soptimality", help="s-optimality class of a special set")
    p.add_argument("--set", required=True)
    _add_format(p)
    p.set_defaults(fn=cmd_soptimality)

    p = sub.add_parser("cyclotomy", help="cyclotomic classes and numbers for (p, e)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--gamma", type=int)
    _add_format(p)
    p.set_defaults(fn=cmd_cyclotomy)

    p = sub.add_parser("tables", help="re-derive the reference tables and verify them")
    _add_format(p)
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
