"""Command-line interface.

Commands: check, enumerate, filled, scan, reproduce.  Exit codes: 0 success,
1 claim failure, 2 usage error, 3 capacity or I/O error.  The environment
variable LMPFS_MAX_ORDER raises or lowers the enumeration cap.
"""

import argparse
import json
import sys
from pathlib import Path

from .catalog import builtin_specs, load_catalog, parse_spec
from .enumeration import (classify_up_to_aut, enumerate_lmpfs, filled_summary,
                          is_filled, scan_filled)
from .errors import CapacityError, SpecParseError
from .notation import parse_set_literal, set_label
from .pfs import analyze
from .reproduce import BUNDLES, run_bundles


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_csv(rows: list[dict]) -> None:
    import csv as _csv
    if not rows:
        return
    writer = _csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)


def _mark(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_check(args) -> int:
    group = parse_spec(args.spec).build()
    subset = parse_set_literal(args.set, group)
    result = analyze(group, subset)
    payload = {
        "group": group.name,
        "order": group.order,
        "set": list(subset),
        "product_free": result.product_free,
        "locally_maximal": result.locally_maximal,
        "fills": result.fills,
        "ss": list(result.ss),
        "s_inverse": list(result.s_inv),
        "t_closure": list(result.t_closure),
        "sqrt": list(result.sqrt_s),
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv([{"field": k, "value": v if not isinstance(v, list)
                    else " ".join(map(str, v))} for k, v in payload.items()])
    else:
        print(f"group           {group.name} (order {group.order})")
        print(f"set             {set_label(group, subset)}")
        print(f"product-free    {_mark(result.product_free)}")
        print(f"locally maximal {_mark(result.locally_maximal)}")
        print(f"fills           {_mark(result.fills)}")
        print(f"SS              {set_label(group, result.ss)}")
        print(f"S^-1            {set_label(group, result.s_inv)}")
        print(f"T(S)            {set_label(group, result.t_closure)}")
        print(f"sqrt(S)         {set_label(group, result.sqrt_s)}")
    return 0


def cmd_enumerate(args) -> int:
    group = parse_spec(args.spec).build()
    sets = enumerate_lmpfs(group, size=args.size, workers=args.workers)
    if args.up_to_aut:
        report = classify_up_to_aut(group, sets)
        payload = report.as_json_dict()
        if args.format == "json":
            _emit_json(payload)
        elif args.format == "csv":
            _emit_csv([{"size": o.size, "orbit_length": o.orbit_length,
                        "fills": o.fills,
                        "canonical": " ".join(map(str, o.canonical))}
                       for o in report.orbits])
        else:
            print(f"{group.name}: {report.total} set(s), "
                  f"{len(report.orbits)} orbit(s)")
            for o in report.orbits:
                print(f"  size {o.size}  x{o.orbit_length:<4d} "
                      f"fills={_mark(o.fills)}  "
                      f"{set_label(group, o.canonical)}")
        return 0
    payload = {
        "group": group.name,
        "order": group.order,
        "size_filter": args.size,
        "count": len(sets),
        "sets": [list(s) for s in sets],
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv([{"size": len(s), "set": " ".join(map(str, s))}
                   for s in sets])
    else:
        print(f"{group.name}: {len(sets)} locally maximal product-free set(s)")
        for s in sets:
            print(f"  size {len(s)}  {set_label(group, s)}")
    return 0


def cmd_filled(args) -> int:
    group = parse_spec(args.spec).build()
    verdict = is_filled(group)
    if args.format == "json":
        _emit_json(verdict.as_json_dict())
    elif args.format == "csv":
        _emit_csv([{"name": group.name, "order": group.order,
                    "filled": verdict.filled,
                    "witness": "" if verdict.witness is None
                    else " ".join(map(str, verdict.witness)),
                    "lmpfs_count": verdict.lmpfs_count}])
    else:
        state = "filled" if verdict.filled else "not filled"
        print(f"{group.name} (order {group.order}): {state} "
              f"[{verdict.lmpfs_count} locally maximal product-free set(s)]")
        if verdict.witness is not None:
            print(f"  non-filling witness: {set_label(group, verdict.witness)}")
    return 0


def cmd_scan(args) -> int:
    if args.catalog:
        problems: list[str] = []
        entries = load_catalog(Path(args.catalog), problems)
        for problem in problems:
            print(f"warning: {problem}", file=sys.stderr)
        results = []
        from .enumeration import ScanEntry
        for entry in entries:
            if entry.order > args.max_order:
                continue
            verdict = is_filled(entry.group)
            results.append(ScanEntry(spec=entry.spec, name=entry.name,
                                     order=entry.order, verdict=verdict))
    else:
        results = scan_filled(builtin_specs(args.max_order),
                              max_order=args.max_order)
    summary = filled_summary(results)
    payload = {
        "max_order": args.max_order,
        "entries": [e.as_json_dict() for e in results],
        "filled_by_order": {str(k): v for k, v in summary.items()},
    }
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        _emit_csv([{"spec": e.spec.text(), "name": e.name or "",
                    "order": e.order or "",
                    "filled": "" if e.verdict is None else e.verdict.filled,
                    "error": e.error or ""} for e in results])
    else:
        for e in results:
            if e.error:
                print(f"  {e.spec.text()}: ERROR {e.error}")
            else:
                state = "filled" if e.verdict.filled else "not filled"
                print(f"  {e.name:10s} order {e.order:3d}  {state}")
        print("filled groups by order:")
        for order, names in summary.items():
            print(f"  {order:3d}: {', '.join(names)}")
    return 0


def cmd_reproduce(args) -> int:
    names = list(BUNDLES) if "all" in args.bundle else args.bundle
    catalog_dir = Path(args.catalog) if args.catalog else None
    results = run_bundles(names, catalog_dir)
    failed = [r for r in results if not r.passed and not r.skipped]
    if args.format == "json":
        _emit_json([{"bundle": r.bundle, "claim": r.claim, "status": r.status,
                     "detail": r.detail} for r in results])
    else:
        for r in results:
            detail = f"  ({r.detail})" if r.detail else ""
            print(f"{r.status:4s} [{r.bundle}] {r.claim}{detail}")
        print(f"{len(results) - len(failed)}/{len(results)} claims passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmpfs",
        description="Locally maximal product-free sets and filled groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("-f", "--format", choices=("table", "json", "csv"),
                       default="table", help="output format")

    p = sub.add_parser("check", help="analyze one subset of one group")
    p.add_argument("spec", help="group spec, e.g. dihedral:7")
    p.add_argument("set", help="set literal, e.g. \"{x^2,x^3,y,x^6*y}\"")
    add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate",
                       help="enumerate locally maximal product-free sets")
    p.add_argument("spec")
    p.add_argument("--size", type=int, default=None,
                   help="only sets of this cardinality")
    p.add_argument("--up-to-aut", action="store_true",
                   help="report automorphism orbits instead of raw sets")
    p.add_argument("--workers", type=int, default=1,
                   help="DFS partitions run in this many processes")
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("filled", help="decide whether a group is filled")
    p.add_argument("spec")
    add_format(p)
    p.set_defaults(func=cmd_filled)

    p = sub.add_parser("scan", help="filled verdicts across many groups")
    p.add_argument("--catalog", default=None,
                   help="catalog directory of group JSON files "
                        "(default: builtin families)")
    p.add_argument("--max-order", type=int, default=31)
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("reproduce", help="run named verification bundles")
    p.add_argument("bundle", nargs="+",
                   help=f"one or more of {', '.join(BUNDLES)} or 'all'")
    p.add_argument("--catalog", default=None,
                   help="catalog directory for the table1 bundle "
                        "(default: packaged fixtures)")
    add_format(p)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
