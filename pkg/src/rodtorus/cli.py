"""
Command line interface.

Exit codes: 0 success, 2 semantic input error, 3 parse error,
4 undecided isotopy, 5 resource limit.
"""
import argparse
import json
import os
import sys

from . import catalog
from .classify import classify, verify_verdict
from .documents import (DocumentError, dumps, fmt_rat, isotopy_to_dict,
                        loads_json, packing_from_dict,
                        verdict_from_dict, verdict_to_dict)
from .errors import (ExactnessError, IntersectingRods, NotParallelPair,
                     ResourceLimitExceeded, RodError, SameRod)
from .isotopy import CellBudget, Undecided, decide_linear_isotopy
from .oracle import OracleConfig, intersect_bruteforce, isotopy_bruteforce
from .rods import validate_packing
from .survey import CLASSES, MAX_CELLS_ENV, run_survey

EXIT_OK, EXIT_SEMANTIC, EXIT_PARSE, EXIT_UNDECIDED, EXIT_RESOURCE = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read_text(path):
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        with open(path, encoding="utf-8") as f:
            return f.read(), path
    except OSError as e:
        raise CliError(EXIT_SEMANTIC, f"{path}: {e.strerror}") from None


def load_packing(path):
    text, source = _read_text(path)
    try:
        return packing_from_dict(loads_json(text, source))
    except (DocumentError, ExactnessError) as e:
        raise CliError(EXIT_PARSE, f"parse error: {e}") from None
    except RodError as e:
        raise CliError(EXIT_SEMANTIC, f"{type(e).__name__}: {e}") from None


def load_valid(path):
    p = load_packing(path)
    try:
        return validate_packing(p)
    except IntersectingRods as e:
        raise CliError(EXIT_SEMANTIC, "invalid packing: " + str(e)) from None
    except RodError as e:
        raise CliError(EXIT_SEMANTIC, f"{type(e).__name__}: {e}") from None


def _budget():
    cap = os.environ.get(MAX_CELLS_ENV)
    return CellBudget(int(cap) if cap else None)


def cmd_validate(args, out):
    p = load_packing(args.file)
    try:
        vp = validate_packing(p)
    except IntersectingRods as e:
        out.write("invalid\n")
        for i, j in e.pairs:
            out.write(f"IntersectingRods({i},{j})\n")
        return EXIT_SEMANTIC
    except RodError as e:
        raise CliError(EXIT_SEMANTIC, f"{type(e).__name__}: {e}") from None
    out.write("valid\n")
    out.write(f"rods: {len(vp)}\n")
    out.write(f"direction_rank: {vp.direction_rank}\n")
    classes = " ".join("{" + ",".join(map(str, c)) + "}" for c in vp.parallel_classes)
    out.write(f"parallel_classes: {classes}\n")
    return EXIT_OK


def _verdict_text(doc):
    lines = [f"hyperbolic: {str(doc['flags']['hyperbolic']).lower()}",
             f"seifert_fibred: {str(doc['flags']['seifert_fibred']).lower()}",
             f"direction_rank: {doc['direction_rank']}"]
    w = doc["witness"]
    if w is None:
        lines.append("toroidal_witness: none")
    elif w["kind"] == "plane_torus":
        lines.append(f"toroidal_witness: plane_torus normal=({','.join(map(str, w['normal']))})"
                     f" offset={w['offset']}")
    else:
        lines.append(f"toroidal_witness: swept_annulus pair=({w['pair'][0]},{w['pair'][1]})"
                     f" v=({','.join(w['v'])})")
    if doc["independence_triple"] is not None:
        lines.append("independence_triple: " + ",".join(map(str, doc["independence_triple"])))
    for c in doc["certificates"]:
        lines.append(f"not_isotopic: ({c['pair'][0]},{c['pair'][1]})"
                     f" candidates={len(c['candidates'])}")
    return "\n".join(lines) + "\n"


def cmd_classify(args, out):
    vp = load_valid(args.file)
    try:
        gv = classify(vp, radius=args.radius, budget=_budget())
    except ResourceLimitExceeded as e:
        raise CliError(EXIT_RESOURCE, str(e)) from None
    doc = verdict_to_dict(gv, vp.packing)
    out.write(dumps(doc) if args.format == "json" else _verdict_text(doc))
    return EXIT_OK


def cmd_verify(args, out):
    text, source = _read_text(args.file)
    try:
        packing, gv = verdict_from_dict(loads_json(text, source))
    except (DocumentError, KeyError, TypeError) as e:
        raise CliError(EXIT_PARSE, f"parse error: {e}") from None
    try:
        vp = validate_packing(packing)
    except IntersectingRods as e:
        raise CliError(EXIT_SEMANTIC, "invalid packing: " + str(e)) from None
    ok = verify_verdict(vp, gv)
    out.write("verified\n" if ok else "REJECTED\n")
    return EXIT_OK if ok else EXIT_SEMANTIC


def _isotopy_text(doc):
    lines = [f"pair: ({doc['pair'][0]},{doc['pair'][1]})", f"result: {doc['result']}"]
    if "v" in doc:
        lines.append(f"v: ({','.join(doc['v'])})")
    if "certificate" in doc:
        c = doc["certificate"]
        lines.append(f"bounded_cell: {str(c['bounded']).lower()}")
        lines.append("cell_vertices: " + " ".join(f"({x},{y})" for x, y in c["vertices"]))
        for cand in c["candidates"]:
            t = cand["target"]
            b = cand["blocker"]
            lines.append(f"candidate ({t[0]},{t[1]}) blocked at ({b[0]},{b[1]})")
    if "search_radius" in doc:
        lines.append(f"search_radius: {doc['search_radius']}")
    return "\n".join(lines) + "\n"


def cmd_isotopy(args, out):
    vp = load_valid(args.file)
    try:
        verdict = decide_linear_isotopy(vp, args.i, args.j, radius=args.radius, budget=_budget())
    except (NotParallelPair, SameRod, IndexError) as e:
        raise CliError(EXIT_SEMANTIC, f"{type(e).__name__}: {e}") from None
    except ResourceLimitExceeded as e:
        raise CliError(EXIT_RESOURCE, str(e)) from None
    doc = isotopy_to_dict(verdict, (args.i, args.j))
    out.write(dumps(doc) if args.format == "json" else _isotopy_text(doc))
    return EXIT_UNDECIDED if isinstance(verdict, Undecided) else EXIT_OK


def cmd_survey(args, out):
    if args.max_entry < 1 or args.denominator < 1 or args.rods < 1:
        raise CliError(EXIT_SEMANTIC, "--max-entry, --denominator and --rods must be >= 1")
    listing = None if args.count_only else []
    try:
        counts, pool = run_survey(args.max_entry, args.denominator, rods=args.rods,
                                  jobs=args.jobs, radius=args.radius,
                                  max_packings=args.max_packings, listing=listing)
    except ResourceLimitExceeded as e:
        raise CliError(EXIT_RESOURCE, f"resource limit: {e}") from None
    out.write(f"# survey max_entry={args.max_entry} denominator={args.denominator}"
              f" rods={args.rods} distinct_rods={len(pool)}\n")
    if listing is not None:
        for subset, lab in listing:
            desc = " ".join(f"{r.direction}@({','.join(fmt_rat(x) for x in r.basepoint)})"
                            .replace(" ", "") for r in (pool[k] for k in subset))
            out.write(f"{lab}\t{desc}\n")
    for c in CLASSES:
        out.write(f"{c}\t{counts[c]}\n")
    out.write(f"total\t{sum(counts.values())}\n")
    return EXIT_OK


def cmd_catalog(args, out):
    if args.action == "list":
        for name in catalog.names():
            out.write(f"{name}\t{len(catalog.CATALOG[name]['rods'])} rods\n")
        out.write("# the O'Keeffe cubic rod packings are not built in; see README\n")
        return EXIT_OK
    if args.name not in catalog.CATALOG:
        raise CliError(EXIT_SEMANTIC, f"unknown catalog entry {args.name!r}")
    out.write(dumps(catalog.document(args.name)))
    return EXIT_OK


def cmd_oracle(args, out):
    vp = load_valid(args.file)
    cfg = OracleConfig(lift_radius=args.radius)
    if args.query == "isotopy":
        try:
            res = isotopy_bruteforce(vp, args.i, args.j, cfg)
        except (NotParallelPair, SameRod, IndexError) as e:
            raise CliError(EXIT_SEMANTIC, f"{type(e).__name__}: {e}") from None
        out.write(dumps(isotopy_to_dict(res, (args.i, args.j))))
    else:
        hit = intersect_bruteforce(vp.rods[args.i], vp.rods[args.j], cfg)
        out.write(json.dumps({"pair": [args.i, args.j], "intersect": hit}) + "\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="rodtorus",
                                description="Classify rod complements in the 3-torus.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check that rods are pairwise disjoint")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", help="hyperbolic / Seifert fibred / toroidal verdict")
    s.add_argument("file")
    s.add_argument("--radius", type=int, default=16)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", help="re-check a verdict document")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("isotopy", help="decide linear isotopy of two parallel rods")
    s.add_argument("file")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.add_argument("--radius", type=int, default=16)
    s.add_argument("--format", choices=("json", "text"), default="json")
    s.set_defaults(func=cmd_isotopy)

    s = sub.add_parser("survey", help="census of small grid packings")
    s.add_argument("--max-entry", type=int, default=1)
    s.add_argument("--denominator", type=int, default=2)
    s.add_argument("--rods", type=int, default=2)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--radius", type=int, default=16)
    s.add_argument("--max-packings", type=int, default=None)
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("catalog", help="built-in example packings")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("oracle", help="brute-force cross-checks")
    s.add_argument("query", choices=("isotopy", "intersect"))
    s.add_argument("file")
    s.add_argument("i", type=int)
    s.add_argument("j", type=int)
    s.add_argument("--radius", type=int, default=8)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as e:
        err.write(str(e) + "\n")
        return e.code


if __name__ == "__main__":
    sys.exit(main())
