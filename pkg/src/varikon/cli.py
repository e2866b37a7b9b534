"""Command-line surface: enumeration, verification, word tables, solving.

Exit codes: 0 ok, 1 check-failed, 2 input-error.
"""

import argparse
import json
import sys

from . import box, fifteen, groups, perm, solver, words
from .report import Report

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


def _print_csv(rows, out):
    for row in rows:
        print(",".join(str(x) for x in row), file=out)


def cmd_enumerate(args, out) -> int:
    table = groups.build_distance_table()
    hist = table.histogram()
    if args.format == "json":
        print(json.dumps({"count": len(table.depth),
                          "max_depth": table.max_depth,
                          "histogram": hist}), file=out)
    else:
        _print_csv([("depth", "count")] + hist, out)
    return OK


def _fifteen_family_report() -> Report:
    rep = Report("three-cycle family from the conjugated words")
    try:
        family = fifteen.three_cycle_family()
    except ValueError as exc:
        rep.add("family construction", "13 cycles (11,12,i) covering all "
                "i except 11,12", f"error: {exc}")
        return rep
    rep.add("family size", 13, len(family))
    covered = set()
    for n, p in sorted(family.items()):
        moved = {i + 1 for i in range(16) if p[i] != i}
        covered |= moved - {11, 12}
        rep.add(f"n={n} cycle", True, {11, 12} <= moved and len(moved) == 3,
                note=perm.format_cycles(p))
    rep.add("third points cover 1..15 minus 11,12",
            set(range(1, 16)) - {11, 12}, covered)
    return rep


def _atoms_report() -> Report:
    rep = Report("alternating-pair 3-cycles")
    try:
        atoms = box.three_cycle_atoms()
    except ValueError as exc:
        rep.add("atoms", "three 3-cycles, reversal inverts", f"error: {exc}")
        return rep
    for pair, p in sorted(atoms.items()):
        rep.add(f"{''.join(pair)} cycle is a 3-cycle fixing piece 1", True,
                p[0] == 0 and sum(1 for i in range(7) if p[i] != i) == 3,
                note=perm.format_cycles(p))
    names = {perm.format_cycles(p) for p in atoms.values()}
    rep.add("unordered cycles", {"(5,6,7)", "(3,4,7)", "(2,4,6)",
                                 "(5,7,6)", "(3,7,4)", "(2,6,4)"}, names)
    return rep


def build_verify_reports() -> list[Report]:
    table = groups.build_distance_table()
    z = groups.center(table)
    kernel = groups.subgroup_K(table)
    reports = [
        groups.verify_center_words(z),
        groups.verify_K_is_A7(kernel),
        groups.verify_structure(table, z),
        _atoms_report(),
        _fifteen_family_report(),
        words.a5_report(),
        words.a6_report(),
    ]
    dihedral = Report("dihedral letter pairs")
    configs = box.enumerate_reachable()
    for x, y in (("R", "U"), ("R", "B"), ("U", "B")):
        dihedral.extend(box.dihedral_check(x, y, configs))
    reports.append(dihedral)
    return reports


def cmd_verify(args, out) -> int:
    reports = build_verify_reports()
    failed = 0
    if args.format == "json":
        payload = [json.loads(r.to_json()) for r in reports]
        failed = sum(not r.passed for r in reports)
        print(json.dumps(payload, indent=2), file=out)
    else:
        for r in reports:
            print(f"== {r.title} ==", file=out)
            for line in r.lines():
                print(line, file=out)
            failed += len(r.failures())
        total = sum(len(r.checks) for r in reports)
        print(f"-- {total - failed}/{total} checks passed --", file=out)
    return CHECK_FAILED if failed else OK


def cmd_solve(args, out) -> int:
    try:
        if args.random:
            config = box.random_reachable(args.seed)
        elif args.config is not None:
            config = box.parse_config(args.config)
        else:
            print("error: need a config or --random", file=sys.stderr)
            return INPUT_ERROR
        if not box.is_reachable(config):
            print(f"error: unreachable config {box.format_config(config)}",
                  file=sys.stderr)
            return INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR

    s = solver.Solver()
    if args.method == "optimal":
        sol = s.solve_optimal(config)
    elif args.method == "a6":
        sol = s.solve_heuristic_a6(config, args.target)
    else:
        sol = s.solve_heuristic_a5(config, args.target)
    print(json.dumps({
        "config": box.format_config(config),
        "method": sol.method,
        "moves": sol.moves,
        "total": sol.total,
        "phases": [{"label": lab, "word": w, "length": len(w)}
                   for lab, w in sol.phases],
        "target": box.format_config(sol.target),
    }, indent=2), file=out)
    return OK


def cmd_words(args, out) -> int:
    table = words.build_a5_table() if args.group == "a5" else words.build_a6_table()
    if args.format == "json":
        print(json.dumps({
            "group": args.group,
            "size": len(table),
            "max_length": table.max_length(),
            "entries": [{"element": el, "length": int(length), "word": w}
                        for el, length, w in table.csv_rows()[1:]],
        }), file=out)
    else:
        _print_csv(table.csv_rows(), out)
    return OK


def cmd_fifteen(args, out) -> int:
    if args.verify_cycles:
        rep = _fifteen_family_report()
        for line in rep.lines():
            print(line, file=out)
        return OK if rep.passed else CHECK_FAILED
    try:
        config = fifteen.parse_config(args.check)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    solvable = fifteen.is_solvable(config)
    print(json.dumps({"config": fifteen.format_config(config),
                      "solvable": solvable}), file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varikon",
        description="Verification laboratory and solver for the 2x2x2 "
                    "Varikon Box.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate",
                       help="reachable-state count and depth histogram")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="run every structural check")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("solve", help="solve one config")
    p.add_argument("config", nargs="?",
                   help="8 comma-separated tokens, '_' for the blank")
    p.add_argument("--method", choices=("optimal", "a6", "a5"),
                   default="optimal")
    p.add_argument("--target", choices=solver.MODES, default="strict")
    p.add_argument("--random", action="store_true",
                   help="solve a random reachable config instead")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("words", help="emit a shortest-word table")
    p.add_argument("--group", choices=("a5", "a6"), required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("fifteen", help="15-puzzle checks")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", metavar="CONFIG",
                       help="16 comma-separated tokens, '_' for the blank")
    group.add_argument("--verify-cycles", action="store_true",
                       help="verify the conjugated 3-cycle family")

    return parser


_DISPATCH = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "words": cmd_words,
    "fifteen": cmd_fifteen,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _DISPATCH[args.command](args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
