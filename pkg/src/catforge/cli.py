"""Batch front-end.

Subcommands: enumerate-monoids, count, verify, reproduce-paper.  All output
is deterministic for fixed inputs and flags; exit codes are 0 success,
1 verification or count mismatch, 2 resource limit, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import expected
from .bimodules import NORMALIZATION_NONE, NORMALIZATION_ORBIT, Bimodule, validate_bimodule
from .categories import TwoObjectCategory, check_idempotent_lemmas, check_orbit_laws, validate_category
from .engine import count_categories, search_completions
from .errors import CatforgeError, OrderTooLarge, SearchBudgetExceeded
from .grouplike import build_grouplike, detect_grouplike
from .monoids import Monoid, canonical_form, cyclic_group, enumerate_monoids

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_RESOURCE = 2
EXIT_INPUT = 3


def _default_budget():
    value = os.environ.get("CATFORGE_BUDGET")
    if value:
        try:
            return int(value)
        except ValueError:
            print(f"error: CATFORGE_BUDGET={value!r} is not an integer", file=sys.stderr)
            raise SystemExit(EXIT_INPUT)
    from ._kernels import DEFAULT_BUDGET

    return DEFAULT_BUDGET


def parse_group_spec(spec: str) -> Monoid:
    """"Z<n>" builds the cyclic group of order n; anything else is read as a
    table JSON file that must validate as a group."""
    if spec.upper().startswith("Z") and spec[1:].isdigit():
        return cyclic_group(int(spec[1:]))
    with open(spec) as handle:
        data = json.load(handle)
    monoid = Monoid.from_json_dict(data)
    from .monoids import is_group

    ok, _ = is_group(monoid)
    if not ok:
        raise ValueError(f"{spec} is not a group table")
    return monoid


def cmd_enumerate_monoids(args) -> int:
    try:
        monoids = enumerate_monoids(args.n, budget=args.budget)
    except OrderTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    entries = []
    for m in monoids:
        structure = detect_grouplike(m)
        entry = m.to_json_dict()
        entry["grouplike"] = structure is not None
        if structure is not None:
            entry["group"] = list(structure.group_elements)
            entry["group_identity"] = structure.group_identity
            entry["chain"] = list(structure.chain)
        entries.append(entry)
    if args.format == "json":
        _emit(args, json.dumps({"n": args.n, "count": len(entries), "monoids": entries}, sort_keys=True, indent=2))
    elif args.format == "csv":
        lines = ["index,grouplike,group_order,chain_length,table"]
        for idx, entry in enumerate(entries):
            flat = ";".join(str(v) for row in entry["table"] for v in row)
            g = len(entry.get("group", [])) if entry["grouplike"] else ""
            k = len(entry.get("chain", [])) if entry["grouplike"] else ""
            lines.append(f"{idx},{int(entry['grouplike'])},{g},{k},{flat}")
        _emit(args, "\n".join(lines))
    else:
        lines = [f"{len(entries)} monoid classes of order {args.n}"]
        for idx, entry in enumerate(entries):
            tag = ""
            if entry["grouplike"]:
                tag = f"  grouplike: group {entry['group']}, chain {entry['chain']}"
            lines.append(f"[{idx}] table {entry['table']}{tag}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_count(args) -> int:
    try:
        group = parse_group_spec(args.group)
    except (OSError, ValueError, json.JSONDecodeError, CatforgeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    normalization = NORMALIZATION_NONE if args.normalize == "none" else NORMALIZATION_ORBIT
    try:
        report = count_categories(
            group,
            args.k1,
            args.k2,
            args.carrier_l,
            args.carrier_r,
            normalization=normalization,
            cross_validate=args.cross_validate,
            budget=args.budget,
            workers=args.workers,
            up_to_iso=args.up_to_iso,
        )
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CatforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.format == "json":
        _emit(args, json.dumps(report.to_json_dict(), sort_keys=True, indent=2))
    elif args.format == "csv":
        _emit(args, report.per_pair_csv().rstrip("\n"))
    else:
        lines = [
            f"group order {report.group_order}, chains ({report.k1}, {report.k2}),"
            f" bimodule classes {report.left_count} x {report.right_count}",
            f"by level: {dict(sorted(report.by_level.items()))}",
            f"total: {report.total}",
        ]
        if report.skipped_top_count:
            lines.append(
                f"(skipped {report.skipped_top_count} object-merging categories at level"
                f" {report.skipped_top_level})"
            )
        if report.cross_validated:
            lines.append("search cross-validation: agreed on every pair")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.file) as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        if data.get("R") is None or data.get("comp_LR") is None:
            return _verify_bimodule_only(args, data)
        cat = TwoObjectCategory.from_json_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed category file: {exc}", file=sys.stderr)
        return EXIT_INPUT
    results = []
    try:
        validate_category(cat)
        results.append(("category associativity", True, None))
    except CatforgeError as exc:
        results.append(("category associativity", False, str(exc)))
    if results[-1][1] and detect_grouplike(cat.monoid_a) and detect_grouplike(cat.monoid_b):
        results.extend(check_idempotent_lemmas(cat))
        results.extend(check_orbit_laws(cat))
    ok = all(passed for _, passed, _ in results)
    _emit_report(args, results)
    return EXIT_OK if ok else EXIT_MISMATCH


def _verify_bimodule_only(args, data) -> int:
    try:
        bim = Bimodule(
            left_monoid=Monoid.from_json_dict(data["A"]),
            right_monoid=Monoid.from_json_dict(data["B"]),
            carrier_size=data["L"]["l"],
            left_action=tuple(tuple(r) for r in data["L"]["left"]),
            right_action=tuple(tuple(r) for r in data["L"]["right"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed bimodule file: {exc}", file=sys.stderr)
        return EXIT_INPUT
    results = []
    try:
        validate_bimodule(bim)
        results.append(("bimodule axioms", True, None))
    except CatforgeError as exc:
        results.append(("bimodule axioms", False, str(exc)))
    results.append(("category-level checks", True, "skipped: no second hom-set"))
    _emit_report(args, results)
    return EXIT_OK if results[0][1] else EXIT_MISMATCH


def _emit_report(args, results):
    if args.format == "json":
        payload = [
            {"check": name, "passed": passed, "witness": None if w is None else str(w)}
            for name, passed, w in results
        ]
        _emit(args, json.dumps(payload, sort_keys=True, indent=2))
    else:
        lines = []
        for name, passed, witness in results:
            mark = "pass" if passed else "FAIL"
            extra = "" if witness is None else f"  ({witness})"
            lines.append(f"{mark}  {name}{extra}")
        _emit(args, "\n".join(lines))


def _row(name, expected_value, actual):
    return {"row": name, "expected": expected_value, "actual": actual, "match": expected_value == actual}


def reproduction_rows(budget, workers, normalize="orbit"):
    """Expected-versus-actual for every published number."""
    rows = []
    monoids3 = enumerate_monoids(3, budget=budget)
    rows.append(_row("monoid classes of order 3", expected.ORDER3_CLASS_COUNT, len(monoids3)))
    paper_keys = {name: canonical_form(expected.order3_monoid(name)) for name in expected.ORDER3_MONOIDS}
    enum_keys = {canonical_form(m) for m in monoids3}
    rows.append(_row("order-3 tables match the published seven", True, enum_keys == set(paper_keys.values())))
    grouplike_names = sorted(
        name for name, key in paper_keys.items()
        if any(canonical_form(m) == key and detect_grouplike(m) for m in monoids3)
    )
    rows.append(_row("grouplike classes among the seven", list(expected.GROUPLIKE_ORDER3), grouplike_names))
    c6, _ = build_grouplike(_trivial(), 2)
    from .bimodules import enumerate_bimodules

    norm = NORMALIZATION_NONE if normalize == "none" else NORMALIZATION_ORBIT
    rows.append(
        _row(
            "bimodule classes over the order-3 chain monoid",
            expected.C6_BIMODULES_ALL,
            len(enumerate_bimodules(c6, c6, 3, NORMALIZATION_NONE, budget)),
        )
    )
    rows.append(
        _row(
            "orbit-law bimodule classes",
            expected.C6_BIMODULES_ORBIT,
            len(enumerate_bimodules(c6, c6, 3, norm, budget)),
        )
    )
    report6 = count_categories(
        _trivial(), 2, 2, 3, 3, cross_validate=True, budget=budget, workers=workers
    )
    rows.append(_row("categories C6-C6 total", expected.C6_TOTAL, report6.total))
    rows.append(
        _row("categories C6-C6 by level", {str(k): v for k, v in expected.C6_BY_LEVEL.items()},
             {str(k): v for k, v in sorted(report6.by_level.items())})
    )
    report5 = count_categories(
        cyclic_group(2), 1, 1, 3, 3, cross_validate=True, budget=budget, workers=workers
    )
    rows.append(_row("categories C5-C5 total", expected.C5_TOTAL, report5.total))
    rows.append(_row("level-0 multiplicity equals center order", expected.C5_CENTER_ORDER, report5.center_order))
    z3 = cyclic_group(3)
    bim_l = Bimodule(z3, z3, 3, expected.Z3_SHIFT_LEFT, expected.Z3_SHIFT_RIGHT)
    bim_r = Bimodule(z3, z3, 3, expected.Z3_SHIFT_LEFT, expected.Z3_TWIST_RIGHT)
    rows.append(
        _row(
            "twisted Z3 pair admits no completion",
            expected.Z3_TWISTED_COMPLETIONS,
            len(search_completions(z3, z3, bim_l, bim_r, budget)),
        )
    )
    return rows


def _trivial():
    from .monoids import trivial_monoid

    return trivial_monoid()


def cmd_reproduce_paper(args) -> int:
    try:
        rows = reproduction_rows(args.budget, args.workers, args.normalize)
    except SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.format == "json":
        _emit(args, json.dumps(rows, sort_keys=True, indent=2))
    else:
        width = max(len(r["row"]) for r in rows)
        lines = []
        for r in rows:
            mark = "ok  " if r["match"] else "FAIL"
            lines.append(f"{mark} {r['row']:<{width}}  expected {r['expected']}  actual {r['actual']}")
        mismatches = [r for r in rows if not r["match"]]
        lines.append(
            f"{len(rows) - len(mismatches)}/{len(rows)} rows match"
            + ("" if not mismatches else f"; {len(mismatches)} mismatched")
        )
        _emit(args, "\n".join(lines))
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_MISMATCH


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catforge", description="finite two-object category engine")
    parser.add_argument("--format", choices=["json", "csv", "text"], default="text")
    parser.add_argument("--budget", type=int, default=None, help="search node budget")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("-o", "--output", default=None, help="write output to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate-monoids", help="monoid classes of one order")
    p_enum.add_argument("n", type=int)

    p_count = sub.add_parser("count", help="count categories for a group and chain lengths")
    p_count.add_argument("group", help='group spec: "Z<n>" or a table JSON file')
    p_count.add_argument("k1", type=int)
    p_count.add_argument("k2", type=int)
    p_count.add_argument("carrier_l", type=int)
    p_count.add_argument("carrier_r", type=int)
    p_count.add_argument("--normalize", choices=["none", "orbit"], default="orbit")
    p_count.add_argument("--cross-validate", action="store_true")
    p_count.add_argument("--up-to-iso", action="store_true")

    p_verify = sub.add_parser("verify", help="validate a category or bimodule JSON file")
    p_verify.add_argument("file")

    p_rep = sub.add_parser("reproduce-paper", help="expected-versus-actual for the published counts")
    p_rep.add_argument("--normalize", choices=["none", "orbit"], default="orbit")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = _default_budget()
    if args.budget <= 0 or args.workers < 1:
        print("error: budget must be positive and workers >= 1", file=sys.stderr)
        return EXIT_INPUT
    handlers = {
        "enumerate-monoids": cmd_enumerate_monoids,
        "count": cmd_count,
        "verify": cmd_verify,
        "reproduce-paper": cmd_reproduce_paper,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
