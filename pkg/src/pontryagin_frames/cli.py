"""Command line front end.

Exit codes: 0 success, 1 input or usage error, 2 the mathematical answer is
negative (not a frame, infeasible norms, degenerate range, not similar,
different family lengths).
"""

import argparse
import json
import sys

from . import document as docmod
from . import linalg
from .construction import Flavor, construct_frame
from .coupling import couple_frames
from .dilation import are_similar, dilate
from .document import Document, DocumentError
from .errors import FrameError, NotMajorizedError
from .frames import validate

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE = 0, 1, 2


class UsageError(Exception):
    pass


def _lookup(table, name, what):
    if name not in table:
        raise UsageError(f"{what} {name!r} not found in document")
    return table[name]


def cmd_validate(doc, args):
    F = _lookup(doc.families, args.family, "family")
    res = validate(F, args.tol)
    if not res.is_frame:
        return EXIT_NEGATIVE, {"family": args.family, "is_frame": False, "rank": res.rank, "dim": res.dim}
    return EXIT_OK, {
        "family": args.family,
        "is_frame": True,
        "A": res.lower,
        "B": res.upper,
        "tight": res.tight,
        "exact": res.exact,
        "rank": res.rank,
    }


def cmd_construct(doc, args):
    space_name, S0 = _lookup(doc.operators, args.operator, "operator")
    norms = _lookup(doc.specs, args.norms, "spec")
    if not hasattr(norms, "norms"):
        raise UsageError(f"spec {args.norms!r} is not a norms spec")
    space = doc.spaces[space_name]
    try:
        F = construct_frame(space, S0, norms, args.flavor)
    except NotMajorizedError as exc:
        body = {"error": str(exc)}
        if exc.report is not None:
            body["majorization"] = exc.report.to_dict()
        return EXIT_NEGATIVE, body
    out = Document(spaces={space_name: space})
    out.add_family(args.name, F, space_name)
    return EXIT_OK, out


def cmd_extend(doc, args):
    F = _lookup(doc.families, args.family, "family")
    D = dilate(F, args.tol)
    out = Document()
    out.spaces[doc.family_space[args.family]] = F.space
    big = out.add_space(D.big_space, "dilated_space")
    out.add_family(args.family, F, doc.family_space[args.family])
    out.add_family(args.name, D.big_frame, big)
    out.operators["P"] = (big, D.projector)
    return EXIT_OK, out


def cmd_couple(doc, args):
    F = _lookup(doc.families, args.family_a, "family")
    G = _lookup(doc.families, args.family_b, "family")
    C = couple_frames(F, G, args.tol)
    out = Document()
    big = out.add_space(C.big_space, "coupled_space")
    out.add_family(args.name, C.coupled_frame, big)
    out.operators["P_K"] = (big, C.P_K)
    out.operators["P_H"] = (big, C.P_H)
    return EXIT_OK, out


def cmd_similar(doc, args):
    F = _lookup(doc.families, args.family_a, "family")
    G = _lookup(doc.families, args.family_b, "family")
    res = are_similar(F, G, args.tol)
    body = {
        "similar": res.similar,
        "range_dim_F": res.range_dim_F,
        "range_dim_G": res.range_dim_G,
        "intertwiner": None if res.intertwiner is None else docmod.encode_matrix(res.intertwiner),
    }
    return (EXIT_OK if res.similar else EXIT_NEGATIVE), body


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="input document (default: stdin)")
    common.add_argument("--output", "-o", default="-", help="output file (default: stdout)")
    common.add_argument("--tol", type=float, default=linalg.TOL_RANK, help="relative rank tolerance")
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for randomized internals (all current algorithms are deterministic)",
    )

    parser = argparse.ArgumentParser(
        prog="pframes", description="Frames on finite-dimensional Pontryagin spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="frame test and optimal bounds")
    p.add_argument("family")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("construct", parents=[common], help="frame with given operator and norms")
    p.add_argument("operator")
    p.add_argument("norms")
    p.add_argument("--flavor", choices=[f.value for f in Flavor], default=Flavor.HILBERT.value)
    p.add_argument("--name", default="constructed", help="name of the output family")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("extend", parents=[common], help="dilate a frame to a larger space")
    p.add_argument("family")
    p.add_argument("--name", default="dilated", help="name of the output family")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("couple", parents=[common], help="couple two frames on a product space")
    p.add_argument("family_a")
    p.add_argument("family_b")
    p.add_argument("--name", default="coupled", help="name of the output family")
    p.set_defaults(func=cmd_couple)

    p = sub.add_parser("similar", parents=[common], help="similarity test with intertwiner")
    p.add_argument("family_a")
    p.add_argument("family_b")
    p.set_defaults(func=cmd_similar)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        doc = docmod.loads(_read(args.input))
        code, result = args.func(doc, args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FrameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.negative:
            _write(args.output, json.dumps({"error": str(exc), "kind": type(exc).__name__}, indent=2) + "\n")
            return EXIT_NEGATIVE
        return EXIT_INPUT
    _write(args.output, docmod.dumps(result))
    return code


if __name__ == "__main__":
    sys.exit(main())
