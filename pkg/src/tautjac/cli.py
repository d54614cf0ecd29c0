"""Command-line surface of the engine.

Exit codes: 0 on success / verified, 1 on a verification failure or a
negative membership answer (counterexample details on stderr), 2 on
usage errors (including expression syntax errors).  All numeric I/O is
exact rational; JSON output is byte-identical for identical flags.
"""

import argparse
import json
import sys
from fractions import Fraction

from .cache import (
    clear_cache,
    get_or_build,
    list_entries,
    resolve_cache_dir,
)
from .errors import (
    CapExceeded,
    CapTooSmall,
    InvalidGenus,
    NotNilpotent,
    ParseError,
    TautjacError,
    VerificationFailure,
)
from .fourier import FourierMap
from .lie import (
    LieContext,
    density_op,
    descent_op,
    field_op,
    raw_field_op,
    run_bracket_suite,
    sl2_triple,
    verify_bracket,
)
from .parse import parse_poly
from .newton import d_to_w, w_to_d


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tautjac",
        description="Exact engine for the tautological ring of a Jacobian.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="verify exact operator identities")
    pv.add_argument("suite", choices=["lie", "sl2", "tilde", "grading", "all"])
    pv.add_argument("--genus", type=int, required=True)
    pv.add_argument("--max-order", type=int, default=4)
    pv.add_argument("--window", type=int, default=None)
    pv.add_argument("--jobs", type=int, default=None)
    pv.add_argument("--format", choices=["table", "json"], default="table")
    pv.add_argument(
        "--verbose", action="store_true", help="list every checked bracket"
    )

    pr = sub.add_parser("relations", help="build and export the relation ideal")
    pr.add_argument("--genus", type=int, required=True)
    pr.add_argument("--source-cap", type=int, default=None)
    pr.add_argument("--weight", type=int, default=None)
    pr.add_argument("--format", choices=["json", "md"], default="json")
    pr.add_argument("--cache-dir", default=None)

    pn = sub.add_parser("normal-form", help="reduce an expression modulo the ideal")
    pn.add_argument("--genus", type=int, required=True)
    pn.add_argument("--expr", required=True)
    pn.add_argument("--source-cap", type=int, default=None)
    pn.add_argument("--cache-dir", default=None)

    pm = sub.add_parser("member", help="ideal membership test for an expression")
    pm.add_argument("--genus", type=int, required=True)
    pm.add_argument("--expr", required=True)
    pm.add_argument("--source-cap", type=int, default=None)
    pm.add_argument("--cache-dir", default=None)

    pf = sub.add_parser("fourier", help="transform checks on the quotient")
    pf.add_argument("--genus", type=int, required=True)
    pf.add_argument("--check", choices=["s2", "conj"], required=True)
    pf.add_argument("--m", type=int, default=None)
    pf.add_argument("--n", type=int, default=None)
    pf.add_argument("--family", choices=["field", "density"], default="field")
    pf.add_argument("--source-cap", type=int, default=None)
    pf.add_argument("--cache-dir", default=None)

    pw = sub.add_parser("newton", help="convert divisor classes to p-q differences")
    pw.add_argument("--genus", type=int, required=True)
    group = pw.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-d", default=None, metavar="W1,W2,...")
    group.add_argument("--to-w", default=None, metavar="D1,D2,...")

    pc = sub.add_parser("cache", help="manage the relation-ideal cache")
    pc.add_argument("--dir", default=None)
    pc.add_argument("--clear", action="store_true")

    pd = sub.add_parser("dump-operator", help="print an operator in debug form")
    pd.add_argument("--genus", type=int, required=True)
    pd.add_argument("--window", type=int, default=8)
    pd.add_argument(
        "--op",
        choices=["descent", "field", "density", "raw", "e", "f", "h"],
        required=True,
    )
    pd.add_argument("--m", type=int, default=None)
    pd.add_argument("--n", type=int, default=None)
    return parser


def _emit_json(data):
    print(json.dumps(data, indent=2))


def _load_ideal(args):
    cap = args.source_cap if args.source_cap is not None else args.genus + 3
    root = resolve_cache_dir(args.cache_dir)
    return get_or_build(args.genus, cap, root)


def _cmd_verify(args):
    window = args.window if args.window is not None else args.max_order + 4
    reports = []
    if args.suite in ("lie", "all"):
        summary = run_bracket_suite(
            [args.genus], args.max_order, window, jobs=args.jobs
        )
        if args.format == "json":
            reports.append(summary)
        else:
            print(
                "bracket suite: genus %d, orders <= %d, window %d"
                % (args.genus, args.max_order, window)
            )
            for key, count in summary["counts"].items():
                print("  %-24s %5d checked" % (key, count))
            print("  total %d" % summary["checked"])
        if summary["failures"]:
            for failure in summary["failures"]:
                print(json.dumps(failure), file=sys.stderr)
            return 1
    kinds = {
        "sl2": ["sl2"],
        "tilde": ["raw_field"],
        "grading": ["grading"],
        "all": ["sl2", "raw_field", "grading"],
    }.get(args.suite, [])
    ctx = LieContext(args.genus, window)
    for kind in kinds:
        try:
            entries = verify_bracket(kind, {"max_order": args.max_order}, ctx)
        except VerificationFailure as failure:
            print(json.dumps(failure.entry), file=sys.stderr)
            return 1
        if args.format == "json":
            reports.extend(entries)
        else:
            print("%s: %d identities verified" % (kind, len(entries)))
            if args.verbose:
                for entry in entries:
                    print("  %-48s %s" % (entry["identity"], entry["status"]))
    if args.format == "json":
        _emit_json(reports if len(reports) != 1 else reports[0])
    return 0


def _cmd_relations(args):
    ideal = _load_ideal(args)
    data = ideal.to_json_dict()
    if args.weight is not None:
        if args.weight > ideal.source_cap:
            print(
                "weight %d exceeds source cap %d" % (args.weight, ideal.source_cap),
                file=sys.stderr,
            )
            return 2
        data["weights"] = [b for b in data["weights"] if b["w"] == args.weight]
    if args.format == "json":
        _emit_json(data)
        return 0
    print("# Derived relations, genus %d, cap %d" % (ideal.genus, ideal.source_cap))
    print("")
    print("| weight | quotient dim | relations |")
    print("|---|---|---|")
    for block in data["weights"]:
        rows = [str(r) for r in ideal.relation_basis(block["w"])]
        print(
            "| %d | %d | %s |"
            % (block["w"], block["quotient_dim"], "; ".join(rows) or "-")
        )
    return 0


def _cmd_normal_form(args):
    ideal = _load_ideal(args)
    f = parse_poly(args.expr)
    print(ideal.normal_form(f))
    return 0


def _cmd_member(args):
    ideal = _load_ideal(args)
    f = parse_poly(args.expr)
    if ideal.contains(f):
        print("true")
        return 0
    print("false")
    print(
        "not in the derived ideal; normal form: %s" % ideal.normal_form(f),
        file=sys.stderr,
    )
    return 1


def _cmd_fourier(args):
    ideal = _load_ideal(args)
    fmap = FourierMap(ideal)
    if args.check == "s2":
        failures = fmap.check_s2()
        if not failures:
            print(
                "S^2 = (-1)^g [-1]^* on all %d quotient basis elements"
                % len(fmap.quotient_basis())
            )
            return 0
        for failure in failures:
            print(json.dumps(failure), file=sys.stderr)
        if args.genus >= 4:
            print(
                "informative at genus >= 4: ideal incomplete at tested "
                "weights - raise source_cap",
                file=sys.stderr,
            )
            return 0
        return 1
    if args.m is None or args.n is None:
        print("--check conj requires --m and --n", file=sys.stderr)
        return 2
    try:
        entries = fmap.verify_conjugation(args.m, args.n, args.family)
    except VerificationFailure as failure:
        print(json.dumps(failure.entry), file=sys.stderr)
        return 1
    for entry in entries:
        print("%s: %s" % (entry["identity"], entry["status"]))
    return 0


def _parse_rational_list(text):
    return [Fraction(chunk.strip()) for chunk in text.split(",") if chunk.strip()]


def _cmd_newton(args):
    raw = args.to_d if args.to_d is not None else args.to_w
    try:
        values = _parse_rational_list(raw)
    except (ValueError, ZeroDivisionError) as err:
        print("bad rational list: %s" % err, file=sys.stderr)
        return 2
    if len(values) != args.genus:
        print(
            "expected %d comma-separated values, got %d" % (args.genus, len(values)),
            file=sys.stderr,
        )
        return 2
    out = w_to_d(values) if args.to_d is not None else d_to_w(values)
    print(",".join(str(v) for v in out))
    return 0


def _cmd_cache(args):
    root = resolve_cache_dir(args.dir)
    if root is None:
        print("no cache directory configured (use --dir or TAUTJAC_CACHE_DIR)")
        return 0
    if args.clear:
        removed = clear_cache(root)
        print("removed %d entries from %s" % (removed, root))
        return 0
    entries = list_entries(root)
    print("cache dir: %s" % root)
    for name in entries:
        print("  %s" % name)
    if not entries:
        print("  (empty)")
    return 0


def _cmd_dump_operator(args):
    ctx = LieContext(args.genus, args.window)
    needs_mn = args.op in ("field", "density", "raw")
    if needs_mn and (args.m is None or args.n is None):
        print("--op %s requires --m and --n" % args.op, file=sys.stderr)
        return 2
    if args.op == "descent":
        op = descent_op(ctx)
    elif args.op == "field":
        op = field_op(args.m, args.n, ctx)
    elif args.op == "density":
        op = density_op(args.m, args.n, ctx)
    elif args.op == "raw":
        op = raw_field_op(args.m, args.n, ctx)
    else:
        op = getattr(sl2_triple(ctx), args.op)
    print(op)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "relations": _cmd_relations,
    "normal-form": _cmd_normal_form,
    "member": _cmd_member,
    "fourier": _cmd_fourier,
    "newton": _cmd_newton,
    "cache": _cmd_cache,
    "dump-operator": _cmd_dump_operator,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as err:
        print("expression error: %s" % err, file=sys.stderr)
        return 2
    except (InvalidGenus, CapTooSmall, CapExceeded, NotNilpotent) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except VerificationFailure as failure:
        print(json.dumps(failure.entry), file=sys.stderr)
        return 1
    except TautjacError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
