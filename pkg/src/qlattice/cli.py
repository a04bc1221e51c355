"""``qlattice`` command line.

Exit codes: 0 ok, 1 verification failure, 2 parse/usage error, 3 invalid
lattice spec, 4 malformed bitstring, 5 enumeration guard exceeded.
"""

import argparse
import json
import sys

from .analysis import census_chains, census_turns, verify_published
from .chain import decode_chain, export_xyz
from .encoder import encode, qubit_budget
from .errors import (
    BitstringFormatError,
    InvalidSpecError,
    ResourceLimitError,
    SpecParseError,
)
from .lattice import resolve_lattice
from .multilinear import format_poly
from .rational import format_rational, parse_rational

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_INVALID_SPEC = 3
EXIT_BITSTRING = 4
EXIT_GUARD = 5


class UsageError(Exception):
    pass


def _dump(obj):
    return json.dumps(obj, indent=2) + "\n"


def _vector(values):
    return "[" + ", ".join(format_rational(v) for v in values) + "]"


def _lattice(args):
    d = parse_rational(args.d) if args.d is not None else None
    return resolve_lattice(args.lattice, d=d)


def _require_format(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"{args.command} does not support --format {args.format}; "
                         f"use one of: {', '.join(allowed)}")


def cmd_encode(args):
    _require_format(args, ("json", "poly"))
    enc = encode(_lattice(args))
    names = ("da", "db") if enc.kind == "planar" else ("da", "db", "dc")
    vectors = [f"c_{name} = {_vector(c)}" for name, c in zip(names, enc.coefficient_vectors())]
    if args.format == "json":
        return _dump({**enc.to_dict(), "summary": vectors})
    lines = [
        f"lattice: {enc.spec.name} ({enc.kind})",
        f"direction_bits: {enc.direction_qubits}",
        f"plane_bits: {enc.plane_qubits}",
        f"per_turn_qubits: {enc.width}",
    ]
    lines += vectors
    for key, poly in enc.components.items():
        lines.append(f"d{key} = {format_poly(poly)}")
    lines += [f"dx = {format_poly(enc.dx)}", f"dy = {format_poly(enc.dy)}",
              f"dz = {format_poly(enc.dz)}"]
    return "\n".join(lines) + "\n"


def cmd_decode(args):
    _require_format(args, ("json", "xyz"))
    spec = _lattice(args)
    enc = encode(spec)
    if args.beads is not None and args.beads < 1:
        raise UsageError("--beads must be >= 1")
    conf = decode_chain(enc, args.bits, m=args.beads)
    if args.format == "json":
        return _dump(conf.to_dict())
    if not conf.valid:
        print("conformation is invalid (unselected plane or padded direction); "
              "XYZ not written, use --format json to inspect", file=sys.stderr)
        return ""
    return export_xyz(conf, comment=f"{spec.name} m={conf.bead_count}")


def cmd_enumerate(args):
    _require_format(args, ("json",))
    spec = _lattice(args)
    enc = encode(spec)
    out = {"lattice": spec.name, **census_turns(enc).to_dict()}
    if args.beads is not None:
        if args.beads < 1 or args.partitions < 1 or args.workers < 1:
            raise UsageError("--beads, --partitions and --workers must be >= 1")
        out["chains"] = census_chains(enc, args.beads, partitions=args.partitions,
                                      workers=args.workers).to_dict()
    return _dump(out)


def cmd_budget(args):
    if args.beads is None:
        raise UsageError("budget needs --beads")
    spec = _lattice(args)
    try:
        budget = qubit_budget(spec, args.beads)
    except ValueError as exc:
        if isinstance(exc, InvalidSpecError):
            raise
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return _dump({"lattice": spec.name, **budget.to_dict()})
    return f"per_turn = {budget.per_turn}\nbeads = {budget.beads}\ntotal = {budget.total}\n"


def cmd_verify(args):
    report = verify_published()
    payload = _dump(report.to_dict())
    if args.out:
        # JSON goes to the file, the human-readable table to stdout
        print(report.table())
        return payload, report.passed
    if args.format == "json":
        return payload, report.passed
    return report.table() + "\n", report.passed


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "enumerate": cmd_enumerate,
    "budget": cmd_budget,
    "verify": cmd_verify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qlattice",
        description="Compile lattice turn geometries into multilinear qubit encodings "
                    "and decode chain bitstrings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lattice=True):
        if lattice:
            p.add_argument("--lattice", required=True,
                           help="builtin:fcc, builtin:cubic-diag, or a JSON spec path")
            p.add_argument("--d", help="bond scale override as p/q (default 1)")
        p.add_argument("--format", choices=("json", "poly", "xyz"), default="json")
        p.add_argument("--out", help="output path (default stdout)")
        return p

    common(sub.add_parser("encode", help="compile a lattice into turn polynomials"))
    p = common(sub.add_parser("decode", help="decode a chain bitstring"))
    p.add_argument("--bits", required=True, help="chain bitstring of 0/1 characters")
    p.add_argument("--beads", type=int, help="bead count m; checks the bitstring length")
    p = common(sub.add_parser("enumerate", help="exhaustive turn and chain census"))
    p.add_argument("--beads", type=int, help="also census all chains of m beads")
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p = common(sub.add_parser("budget", help="qubit count for an m-bead chain"))
    p.add_argument("--beads", type=int)
    common(sub.add_parser("verify", help="check computed values against reference values"),
           lattice=False)
    return parser


def _fail(code, message):
    print(f"qlattice: error: {message}", file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    passed = True
    try:
        result = COMMANDS[args.command](args)
        if isinstance(result, tuple):
            result, passed = result
    except (SpecParseError, UsageError) as exc:
        return _fail(EXIT_PARSE, exc)
    except InvalidSpecError as exc:
        detail = "".join(f"\n  - {v}" for v in exc.violations)
        return _fail(EXIT_INVALID_SPEC, f"{exc}{detail}")
    except BitstringFormatError as exc:
        return _fail(EXIT_BITSTRING, exc)
    except ResourceLimitError as exc:
        return _fail(EXIT_GUARD, exc)

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
