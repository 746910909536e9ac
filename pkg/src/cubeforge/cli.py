"""Command-line interface.

Subcommands: forge, pell, eliminate, twist, findform, verify.  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 at least one certified result,
1 clean no-result, 2 input or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .concoct import find_form, implicitize, twist_no_solution
from .cubic import WeightedQuadruple
from .errors import (
    CubeforgeError,
    DefiniteForm,
    DegenerateInitialVectors,
    EliminationCollapse,
    EmptySeedSet,
    InvalidForm,
    InvalidQuadruple,
    MalformedTheorem,
    NoForm,
    NoOrbitFound,
    NoTargetedForm,
    ParseError,
    PoleAtOrigin,
    SingularSubstitution,
    ZeroB,
)
from .cfinite import RationalGF
from .forge import certify_theorem, forge, render, theorem_from_json, theorem_to_json
from .parsing import parse_poly
from .quadform import QuadForm, sol_quad

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_EMPTY_ERRORS = (EmptySeedSet, NoOrbitFound, NoForm, NoTargetedForm, EliminationCollapse)
_INPUT_ERRORS = (
    ParseError,
    PoleAtOrigin,
    MalformedTheorem,
    DefiniteForm,
    DegenerateInitialVectors,
    ZeroB,
    SingularSubstitution,
    InvalidForm,
    InvalidQuadruple,
    ValueError,
    OSError,
    json.JSONDecodeError,
    KeyError,
)


def _parse_form(text: str) -> QuadForm:
    return QuadForm.from_poly(parse_poly(text, ("m", "n")))


def _parse_gf(text: str) -> RationalGF:
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError(f"generating function must be 'num;den', got {text!r}")
    num = [int(c) for c in parts[0].split(",") if c.strip() != ""]
    den = [int(c) for c in parts[1].split(",") if c.strip() != ""]
    return RationalGF(num, den)


def _parse_matrix(text: str) -> list[list[int]]:
    rows = [r for r in text.split(";") if r.strip() != ""]
    return [[int(c) for c in row.split(",")] for row in rows]


def _load_seeds(path: str, a: int, b: int) -> list[WeightedQuadruple]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    seeds = []
    for entry in data:
        coords = entry["coords"] if isinstance(entry, dict) else entry
        if len(coords) != 4:
            raise ValueError(f"seed {entry!r} does not have four coordinates")
        seeds.append(WeightedQuadruple(a, b, *(int(c) for c in coords)))
    return seeds


def _cmd_forge(args) -> int:
    extra = _load_seeds(args.seed_file, args.a, args.b) if args.seed_file else None
    theorems = forge(
        args.a,
        args.b,
        search_bound=args.search_bound,
        guess_order=args.guess_order,
        target_cap=args.target_cap,
        max_theorems=args.max_theorems,
        extra_seeds=extra,
    )
    if not theorems:
        print("NoTheorem: every pipeline branch failed", file=sys.stderr)
        return EXIT_EMPTY
    if args.format == "json":
        print(json.dumps([theorem_to_json(t) for t in theorems], indent=2, sort_keys=True))
    else:
        print(
            "\n\n".join(render(t, args.format) for t in theorems)
        )
    return EXIT_OK


def _cmd_pell(args) -> int:
    form = _parse_form(args.form)
    orbit = sol_quad(
        form, args.guess_order, bound=args.bound, target_cap=args.target_cap
    )
    payload = {"form": str(form)}
    payload.update(orbit.to_json())
    print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_eliminate(args) -> int:
    p = parse_poly(args.x, ("m", "n"))
    q = parse_poly(args.y, ("m", "n"))
    r = parse_poly(args.z, ("m", "n"))
    s = implicitize(p, q, r)
    print(str(s))
    return EXIT_OK


def _cmd_twist(args) -> int:
    matrix = _parse_matrix(args.matrix)
    base = parse_poly(args.base, ("x", "y", "z"))
    print(str(twist_no_solution(base, matrix)))
    return EXIT_OK


def _cmd_findform(args) -> int:
    seqs = [_parse_gf(text) for text in args.gf]
    result = find_form(seqs, args.degree, args.target)
    print(json.dumps(result.to_json(), indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_verify(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    items = data if isinstance(data, list) else [data]
    all_ok = True
    for item in items:
        thm = theorem_from_json(item)
        cert = certify_theorem(thm)
        if cert.certified:
            print(f"certified, depth {cert.bound}")
        else:
            all_ok = False
            print(
                f"refuted at n={cert.witness} (checked depth {cert.bound})",
                file=sys.stderr,
            )
    return EXIT_OK if all_ok else EXIT_EMPTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeforge",
        description="Discover and certify infinite families of solutions of "
        "cubic Diophantine equations a*X^3 + a*Y^3 + b*Z^3 = c.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_forge = sub.add_parser("forge", help="produce certified cubic theorems")
    p_forge.add_argument("--a", type=int, required=True)
    p_forge.add_argument("--b", type=int, required=True)
    p_forge.add_argument("--search-bound", type=int, default=12)
    p_forge.add_argument("--guess-order", type=int, default=4)
    p_forge.add_argument("--target-cap", type=int, default=30)
    p_forge.add_argument("--max-theorems", type=int, default=10)
    p_forge.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p_forge.add_argument("--seed-file", help="JSON file with extra [x,y,z,w] seeds")
    p_forge.set_defaults(func=_cmd_forge)

    p_pell = sub.add_parser("pell", help="solve a binary quadratic form")
    p_pell.add_argument("--form", required=True, help="polynomial in m and n")
    p_pell.add_argument("--guess-order", type=int, default=4)
    p_pell.add_argument("--bound", type=int, default=2000)
    p_pell.add_argument("--target-cap", type=int, default=30)
    p_pell.set_defaults(func=_cmd_pell)

    p_elim = sub.add_parser(
        "eliminate", help="implicit equation of x=P(m,n), y=Q(m,n), z=R(m,n)"
    )
    p_elim.add_argument("--x", required=True)
    p_elim.add_argument("--y", required=True)
    p_elim.add_argument("--z", required=True)
    p_elim.set_defaults(func=_cmd_eliminate)

    p_twist = sub.add_parser(
        "twist", help="substitute a nonsingular matrix into an insoluble cubic"
    )
    p_twist.add_argument("--matrix", required=True, help='"a,b,c;d,e,f;g,h,i"')
    p_twist.add_argument("--base", default="x^3 + y^3 + z^3")
    p_twist.set_defaults(func=_cmd_twist)

    p_find = sub.add_parser(
        "findform", help="find a form constant along C-finite sequences"
    )
    p_find.add_argument("--degree", type=int, required=True)
    p_find.add_argument(
        "--target", choices=("constant", "alternating", "none"), default="constant"
    )
    p_find.add_argument(
        "--gf",
        action="append",
        required=True,
        help='generating function "num;den" with ascending coefficients',
    )
    p_find.set_defaults(func=_cmd_findform)

    p_verify = sub.add_parser("verify", help="re-certify a serialized theorem")
    p_verify.add_argument("--file", required=True)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _EMPTY_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except _INPUT_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CubeforgeError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    raise SystemExit(main())
