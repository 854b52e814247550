"""Command line front end.

Subcommands: dim, decompose, bratteli, bijection, verify. Exit codes:
0 success, 1 verify found failures, 2 malformed flags or literals,
3 semantically invalid input (size mismatches, bad labels, bad paths).
All normal output goes to stdout, diagnostics to stderr, and equal
invocations produce byte-identical output.
"""

import argparse
import csv
import io
import json
import sys

from .bijection import pair_to_path, path_to_pair
from .branch import AltLabel
from .bratteli import build_diagram, export, format_label
from .dims import GroupModuleContext, block_dimension, decompose, parse_level
from .young import parse_partition
from . import verify as verify_mod


class _LiteralError(Exception):
    """A flag value that could not be read at all (exit code 2)."""


def _usage_parse(fn, text, what):
    try:
        return fn(text)
    except ValueError as exc:
        raise _LiteralError(f"bad {what}: {exc}") from None


def _parse_label(group, text):
    if group == "S":
        return _usage_parse(parse_partition, text, "label")
    sign = None
    body = text.strip()
    if body and body[-1] in "+-":
        sign = body[-1]
        body = body[:-1]
    base = _usage_parse(parse_partition, body, "label")
    # canonicality and sign rules are semantic, not syntactic
    return AltLabel(base, sign)


def _parse_pair(text):
    group, _, rest = text.partition(":")
    if group not in ("S", "A") or not rest:
        raise _LiteralError(f"bad pair {text!r}: expected like S:4 or A:6")
    try:
        n = int(rest)
    except ValueError:
        raise _LiteralError(f"bad pair {text!r}: {rest!r} is not an integer") from None
    return group, n


def _cmd_dim(args):
    level = _usage_parse(parse_level, args.k, "level")
    label = _parse_label(args.group, args.label)
    ctx = GroupModuleContext(args.group, args.n, args.module, level)
    print(block_dimension(ctx, label))
    return 0


def _cmd_decompose(args):
    level = _usage_parse(parse_level, args.k, "level")
    ctx = GroupModuleContext(args.group, args.n, args.module, level)
    blocks = [(format_label(lab), d) for lab, d in decompose(ctx)]
    if args.format == "text":
        print("  ".join(f"{lab}:{d}" for lab, d in blocks))
    elif args.format == "json":
        doc = {
            "pair": f"{args.group}:{args.n}",
            "module": args.module,
            "level": str(level),
            "blocks": [
                {"label": lab, "multiplicity": str(d)} for lab, d in blocks
            ],
        }
        print(json.dumps(doc, separators=(",", ":")))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", "multiplicity"])
        for lab, d in blocks:
            writer.writerow([lab, d])
        sys.stdout.write(buf.getvalue())
    return 0


def _cmd_bratteli(args):
    group, n = _parse_pair(args.pair)
    levels = _usage_parse(parse_level, args.levels, "levels")
    diagram = build_diagram(group, n, args.module, levels)
    sys.stdout.write(export(diagram, args.format))
    return 0


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _LiteralError(f"bad json input: {exc}") from None


def _as_shape_list(doc, key):
    value = doc.get(key) if isinstance(doc, dict) else None
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ValueError(f"input must carry {key!r} as a list of lists")
    try:
        return tuple(tuple(int(x) for x in row) for row in value)
    except (TypeError, ValueError):
        raise ValueError(f"{key!r} entries must be integers") from None


def _cmd_bijection(args):
    text = args.input if args.input is not None else sys.stdin.read()
    doc = _load_json(text)
    if args.direction == "to-pair":
        path = _as_shape_list(doc, "path")
        blocks, tableau = path_to_pair(path, args.n)
        out = {
            "setPartition": [list(b) for b in blocks],
            "tableau": [list(r) for r in tableau],
        }
    else:
        blocks = _as_shape_list(doc, "setPartition")
        tableau = _as_shape_list(doc, "tableau")
        path = pair_to_path(blocks, tableau, args.n)
        out = {"path": [list(s) for s in path]}
    print(json.dumps(out, separators=(",", ":")))
    return 0


def _cmd_verify(args):
    results = verify_mod.run(args.scope, args.n_max, args.k_max)
    failures = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        failures += 0 if ok else 1
        print(f"{name}: {status} ({detail})")
    print(f"summary: {len(results)} suites, {failures} failures")
    return 1 if failures else 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="centdim",
        description="Exact centralizer-algebra dimensions for tensor powers "
        "of the permutation and reflection modules of S_n and A_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dim = sub.add_parser("dim", help="dimension of one irreducible block")
    dim.add_argument("--group", choices=("S", "A"), required=True)
    dim.add_argument("--module", choices=("perm", "refl"), required=True)
    dim.add_argument("--n", type=int, required=True)
    dim.add_argument("--k", required=True, help="level: 3, 7/2, or 3.5")
    dim.add_argument("--lambda", dest="label", required=True, help="block label")
    dim.set_defaults(handler=_cmd_dim)

    dec = sub.add_parser("decompose", help="all nonzero blocks at a level")
    dec.add_argument("--group", choices=("S", "A"), required=True)
    dec.add_argument("--module", choices=("perm", "refl"), required=True)
    dec.add_argument("--n", type=int, required=True)
    dec.add_argument("--k", required=True, help="level: 3, 7/2, or 3.5")
    dec.add_argument("--format", choices=("text", "json", "csv"), default="text")
    dec.set_defaults(handler=_cmd_decompose)

    brat = sub.add_parser("bratteli", help="build and render a tower diagram")
    brat.add_argument("--pair", required=True, help="group and size, like S:4")
    brat.add_argument("--module", choices=("perm", "refl"), required=True)
    brat.add_argument("--levels", required=True, help="top level: 4 or 7/2")
    brat.add_argument("--format", choices=("text", "json", "dot"), default="text")
    brat.set_defaults(handler=_cmd_bratteli)

    bij = sub.add_parser("bijection", help="walks versus set-partition pairs")
    bij.add_argument("--n", type=int, required=True)
    bij.add_argument("--direction", choices=("to-pair", "to-path"), required=True)
    bij.add_argument(
        "--input", help="json document; read from stdin when omitted"
    )
    bij.set_defaults(handler=_cmd_bijection)

    ver = sub.add_parser("verify", help="run the built-in check suites")
    ver.add_argument("--scope", choices=("all", "golden", "oracle"), default="all")
    ver.add_argument("--n-max", type=int, default=6)
    ver.add_argument("--k-max", type=int, default=4)
    ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except _LiteralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry():
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
