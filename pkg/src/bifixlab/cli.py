"""Command-line interface.

Exit codes: 0 success (every measure passed), 1 some measure failed, 2 bad input
or resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys

from .atoms import atom_bound, atom_complexity, atoms
from .automata import minimize
from .errors import BifixError
from .experiments import atom_order, run_experiment
from .freeness import (find_empty_state, is_bifix_free, is_non_returning, is_prefix_free,
                       is_standard_form, is_suffix_free, standard_form)
from .io import export_dot, read_dfa, serialize_dfa
from .operations import boolean, concat, reverse, star
from .semigroup import (colliding_pairs, focused_pairs, is_sub_wbf, transition_semigroup,
                        type_counts)
from .witnesses import WitnessSpec, dialect

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

BINARY_OPS = {"union": "union", "inter": "intersection", "diff": "difference",
              "symdiff": "symmetric_difference"}


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2) + "\n")


def _emit_dfa(args, d) -> None:
    if args.json:
        _emit_json(args, {"alphabet": list(d.alphabet), "states": d.state_count,
                          "initial": d.initial, "finals": sorted(d.finals),
                          "delta": d.delta.tolist()})
    else:
        _emit(args, serialize_dfa(d))


def _pairs_text(pairs):
    return " ".join(f"{p},{q}" for p, q in sorted(pairs)) or "-"


def cmd_witness(args):
    family = "atom_witness" if args.family == "atoms" else args.family
    spec = WitnessSpec(family, args.n, args.alpha, args.seed, args.letters)
    _emit_dfa(args, spec.build())
    return EXIT_OK


def cmd_check(args):
    d = read_dfa(args.file)
    m = minimize(d)
    info = {
        "states": d.state_count,
        "minimal": m.state_count == d.state_count,
        "state_complexity": m.state_count,
        "prefix_free": is_prefix_free(d),
        "suffix_free": is_suffix_free(d),
        "bifix_free": is_bifix_free(d),
        "non_returning": is_non_returning(d),
        "empty_state": find_empty_state(d),
        "standard_form": is_standard_form(d),
    }
    if args.json:
        _emit_json(args, info)
    else:
        lines = [f"{k}: {'none' if v is None else str(v).lower()}" for k, v in info.items()]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_op(args):
    lhs = read_dfa(args.lhs)
    if args.kind in ("star", "reverse"):
        if args.rhs is not None:
            raise BifixError(f"'{args.kind}' takes one automaton")
        fn = star if args.kind == "star" else reverse
        result = fn(lhs, args.max_states)
    else:
        if args.rhs is None:
            raise BifixError(f"'{args.kind}' takes two automata")
        rhs = read_dfa(args.rhs)
        if args.kind == "concat":
            result = concat(lhs, rhs, args.max_states)
        else:
            result = boolean(lhs, rhs, BINARY_OPS[args.kind])
    _emit_dfa(args, result)
    return EXIT_OK


def cmd_semigroup(args):
    d = minimize(read_dfa(args.file))
    if args.classify or args.pairs:
        d = standard_form(d)
    sg = transition_semigroup(d, args.max_elements)
    info = {"states": d.state_count, "letters": d.symbol_count, "syntactic": sg.size}
    if args.classify:
        info["types"] = type_counts(sg)
        info["sub_wbf"] = is_sub_wbf(sg)
    if args.pairs:
        info["colliding"] = sorted(colliding_pairs(sg))
        info["focused"] = sorted(focused_pairs(sg))
    if args.json:
        _emit_json(args, info)
        return EXIT_OK
    lines = [f"states: {info['states']}", f"letters: {info['letters']}",
             f"syntactic: {info['syntactic']}"]
    if args.classify:
        lines.append("types: " + " ".join(f"{k}={v}" for k, v in info["types"].items()))
        lines.append(f"sub_wbf: {str(info['sub_wbf']).lower()}")
    if args.pairs:
        lines.append("colliding: " + _pairs_text(info["colliding"]))
        lines.append("focused: " + _pairs_text(info["focused"]))
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_atoms(args):
    d = minimize(read_dfa(args.file))
    try:
        d = standard_form(d)
        bounded = d.state_count >= 3
    except BifixError:
        bounded = False
    n = d.state_count
    found = atom_order(n, atoms(d)) if bounded else atoms(d)
    rows = []
    for s in found:
        rows.append({"atom": sorted(s), "complexity": atom_complexity(d, s),
                     "bound": atom_bound(n, s) if bounded else None})
    if args.json:
        _emit_json(args, {"states": n, "count": len(rows), "atoms": rows})
        return EXIT_OK
    lines = [f"states: {n}", f"atoms: {len(rows)}"]
    for r in rows:
        name = "{" + ",".join(map(str, r["atom"])) + "}"
        bound = "" if r["bound"] is None else f" bound {r['bound']}"
        lines.append(f"A{name}: {r['complexity']}{bound}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def parse_map(text: str) -> dict:
    mapping = {}
    for item in filter(None, (p.strip() for p in text.split(","))):
        src, sep, dst = item.partition("=")
        if not sep or not src or not dst:
            raise BifixError(f"bad mapping entry {item!r}, expected x=y or x=-")
        mapping[src] = None if dst == "-" else dst
    return mapping


def cmd_dialect(args):
    _emit_dfa(args, dialect(read_dfa(args.file), parse_map(args.map)))
    return EXIT_OK


def _report(args, report):
    _emit(args, report.to_json() + "\n" if args.json else report.format_table())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_table(args):
    return _report(args, run_experiment("table-ops", m=args.m, n=args.n,
                                        max_states=args.max_states))


def cmd_verify(args):
    params = {"n": args.n}
    if args.what in ("product", "star"):
        params.update(trials=args.trials, seed=args.seed, max_states=args.max_states)
    elif args.what == "revmagic":
        params["max_states"] = args.max_states
    elif args.what == "syntactic":
        params["max_elements"] = args.max_elements
    return _report(args, run_experiment(args.what, **params))


def cmd_export_dot(args):
    _emit(args, export_dot(read_dfa(args.file)))
    return EXIT_OK


def _global_flags(default):
    # subcommands repeat the flags with SUPPRESS so they don't clobber top-level values
    flags = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    flags.add_argument("--json", action="store_true", default=default or False,
                       help="emit JSON")
    flags.add_argument("--max-states", type=int, default=default,
                       help="cap on powerset states (default 2^20)")
    flags.add_argument("--max-elements", type=int, default=default,
                       help="cap on semigroup elements (default 5e6)")
    flags.add_argument("-o", "--output", default=default, help="write output to FILE")
    return flags


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="bifixlab", parents=[_global_flags(None)], allow_abbrev=False,
        description="Complexity of bifix-free regular languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", parents=[common], allow_abbrev=False,
                       help="generate a witness DFA")
    p.add_argument("family", choices=["unary", "ternary", "ternary-dialect", "wstream",
                                      "atoms", "revmagic", "random"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--alpha", type=int)
    p.add_argument("--letters", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", parents=[common], allow_abbrev=False,
                       help="report structural properties")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("op", parents=[common], allow_abbrev=False,
                       help="apply an operation, output the minimal DFA")
    p.add_argument("kind", choices=[*BINARY_OPS, "concat", "star", "reverse"])
    p.add_argument("lhs")
    p.add_argument("rhs", nargs="?")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("semigroup", parents=[common], allow_abbrev=False,
                       help="transition semigroup of the minimal DFA")
    p.add_argument("file")
    p.add_argument("--classify", action="store_true", help="count type 1/2/3 elements")
    p.add_argument("--pairs", action="store_true", help="list colliding and focused pairs")
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("atoms", parents=[common], allow_abbrev=False,
                       help="atoms and their complexities")
    p.add_argument("file")
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("dialect", parents=[common], allow_abbrev=False,
                       help="permute or delete letters")
    p.add_argument("file")
    p.add_argument("--map", required=True, help="e.g. a=b,b=a,c=- (- deletes)")
    p.set_defaults(func=cmd_dialect)

    p = sub.add_parser("table", parents=[common], allow_abbrev=False,
                       help="reproduce the operations table")
    p.add_argument("table", choices=["ops"])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], allow_abbrev=False,
                       help="compare observed complexities with closed forms")
    p.add_argument("what", choices=["syntactic", "atoms", "revmagic", "product", "star"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], allow_abbrev=False,
                       help="Graphviz rendering")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BifixError, OSError) as exc:
        print(f"bifixlab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
