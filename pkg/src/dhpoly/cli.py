"""Command-line front end.

Exit codes are a stable contract: 0 success (or checked-true), 1 checked-
false, 2 usage or input error, 3 internal invariant violation.  Every failure
writes a one-line JSON record {code, message, location} to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .completion import complete
from .errors import (
    ConstructionError,
    InvariantError,
    ParseError,
    PreconditionError,
    SingularMatrixError,
    SizeError,
)
from .formats import (
    format_matrix,
    parse_bordered,
    parse_matrix,
    parse_poly,
    poly_to_json,
    poly_to_text,
)
from .grid import discrete_laplacian_matrix, evaluate_on_lattice, interpolates, is_inner_harmonic
from .interpolate import bilinear, telescopic
from .poly import discrete_laplacian_poly, generate_basis, is_discrete_harmonic
from .sandpile import check_conservation, orbit, phi, random_config, standard_gf

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _emit_error(code_name, message, location=None):
    record = {"code": code_name, "message": message, "location": location}
    print(json.dumps(record), file=sys.stderr)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        raise SystemExit(EXIT_USAGE)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(args, text):
    out = getattr(args, "output", None)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_poly(args, P):
    if args.format == "text":
        _write(args, poly_to_text(P) + "\n")
    else:
        _write(args, poly_to_json(P) + "\n")


def cmd_check(args):
    H = parse_matrix(_read(args.matrix))
    ok = is_inner_harmonic(H)
    print(json.dumps({"inner_harmonic": ok, "size": H.size}))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_complete(args):
    border = parse_bordered(_read(args.matrix))
    _write(args, format_matrix(complete(border)))
    return EXIT_OK


def cmd_interpolate(args):
    H = parse_matrix(_read(args.matrix))
    if args.oracle == "bilinear":
        P = bilinear(H)
    else:
        P = telescopic(H)
    if args.verify:
        if not interpolates(P, H):
            raise InvariantError("output polynomial does not interpolate the input")
        if args.oracle != "bilinear" and not is_discrete_harmonic(P):
            raise InvariantError("output polynomial is not discrete harmonic")
    _emit_poly(args, P)
    return EXIT_OK


def cmd_eval(args):
    P = parse_poly(_read(args.poly))
    _write(args, format_matrix(evaluate_on_lattice(P, args.size)))
    return EXIT_OK


def cmd_laplacian(args):
    text = _read(args.input)
    if args.poly:
        _emit_poly(args, discrete_laplacian_poly(parse_poly(text)))
    else:
        _write(args, format_matrix(discrete_laplacian_matrix(parse_matrix(text))))
    return EXIT_OK


def cmd_basis(args):
    basis = generate_basis(args.degree)
    if args.format == "text":
        _write(args, "".join(poly_to_text(p) + "\n" for p in basis.elements))
    else:
        payload = {
            "max_degree": basis.max_degree,
            "elements": [json.loads(poly_to_json(p)) for p in basis.elements],
        }
        _write(args, json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_sandpile_verify(args):
    if args.gf in ("i", "j", "i2-j2"):
        f = standard_gf(args.size, args.gf)
    else:
        f = parse_matrix(_read(args.gf))
        if f.size != args.size:
            raise PreconditionError(
                f"weight matrix has size {f.size}, expected {args.size}"
            )
    config = random_config(args.size, args.seed)
    values = [phi(f, c) for c in orbit(config, args.steps)]
    for t, v in enumerate(values):
        print(f"{t},{v}")
    conserved = all(v == values[0] for v in values)
    return EXIT_OK if conserved else EXIT_FALSE


def _build_parser():
    parser = _Parser(prog="dhpoly", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="exit 0 iff the CSV matrix is inner-harmonic")
    p.add_argument("matrix", help="matrix CSV path, or - for stdin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("complete", help="fill a CSV whose interior entries are '?'")
    p.add_argument("matrix", help="bordered matrix CSV path, or - for stdin")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("interpolate", help="emit an interpolating polynomial")
    p.add_argument("matrix", help="matrix CSV path, or - for stdin")
    p.add_argument(
        "--oracle",
        choices=["bilinear"],
        default=None,
        help="use plain bilinear interpolation instead of the harmonic construction",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="re-evaluate the output on the lattice (and re-check harmonicity for "
        "the default construction); exits 3 on mismatch",
    )
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("eval", help="evaluate a polynomial file on the lattice")
    p.add_argument("poly", help="polynomial file (JSON or text), or - for stdin")
    p.add_argument("--size", type=int, required=True, help="lattice size L")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("laplacian", help="apply the five-point operator")
    p.add_argument("input", help="matrix CSV (or polynomial file with --poly), - for stdin")
    p.add_argument("--poly", action="store_true", help="treat the input as a polynomial")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_laplacian)

    p = sub.add_parser("basis", help="emit the canonical discrete harmonic basis")
    p.add_argument("--degree", type=int, required=True, help="maximum total degree")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser(
        "sandpile-verify",
        help="print the weighted-sum trace of a random toppling orbit; exit 1 if it varies",
    )
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument(
        "--gf",
        required=True,
        help="weight matrix: i, j, i2-j2, or a CSV path",
    )
    p.set_defaults(func=cmd_sandpile_verify)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return args.func(args)
    except ParseError as exc:
        location = None
        if exc.line is not None:
            location = {"line": exc.line, "column": exc.column}
        _emit_error("parse-error", str(exc), location)
        return EXIT_USAGE
    except (SizeError, PreconditionError, ValueError) as exc:
        _emit_error("input-error", str(exc))
        return EXIT_USAGE
    except OSError as exc:
        _emit_error("io-error", str(exc))
        return EXIT_USAGE
    except (InvariantError, ConstructionError, SingularMatrixError) as exc:
        _emit_error("internal-error", str(exc))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
