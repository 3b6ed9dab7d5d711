"""``tiledim`` command line.

Exit codes: 0 success/true, 1 checked and false, 2 invalid input or usage,
3 internal integrity error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import jsonio
from .errors import GenerationError, IntegrityError, PreconditionError, TilingError, UsageError
from .generate import FIXTURES, GenSpec, fixture, random_proper
from .geometry import parse_rational
from .order import (
    SimplicialComplex,
    Realizer,
    build_complex,
    build_digraph,
    collapse_corner,
    construct_realizer,
    dm_dimension,
    verify_realizer,
)
from .properness import METHODS, check
from .render import render_svg
from .separations import compute_separations, perturb_general_position
from .tiling import ExtendedTiling, Tiling, cut_tiling, slice_tiling, validate

OK, FALSE, INVALID, INTEGRITY = 0, 1, 2, 3


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_tiling(path: str | None, require_valid: bool = True) -> Tiling:
    t = jsonio.loads_tiling(_read(path))
    if require_valid:
        report = validate(t)
        if not report.valid:
            raise UsageError("input is not a valid tiling: " + report.violations[0].detail)
    return t


def _load_complex(path: str | None) -> SimplicialComplex:
    doc = jsonio.loads_any(_read(path))
    if isinstance(doc, Tiling):
        report = validate(doc)
        if not report.valid:
            raise UsageError("input is not a valid tiling: " + report.violations[0].detail)
        return build_complex(doc)
    if isinstance(doc, SimplicialComplex):
        return doc
    raise UsageError("expected a tiling or a complex")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2) + "\n")


def cmd_validate(args) -> int:
    report = validate(_load_tiling(args.input, require_valid=False))
    _emit_json(args, report.to_json())
    return OK if report.valid else FALSE


def cmd_proper(args) -> int:
    t = _load_tiling(args.input)
    ext = ExtendedTiling(t)
    methods = sorted(METHODS) if args.method == "all" else [args.method]
    reports = [check(ext, m) for m in methods]
    verdicts = {r.proper for r in reports}
    if len(verdicts) > 1:
        raise IntegrityError("properness characterisations disagree: " + json.dumps([r.to_json(ext) for r in reports]))
    proper = verdicts.pop()
    out = {"proper": proper, "reports": [r.to_json(ext) for r in reports]}
    _emit_json(args, out)
    return OK if proper else FALSE


def cmd_slice(args) -> int:
    t = _load_tiling(args.input)
    _emit(args, jsonio.dumps_tiling(slice_tiling(t, args.axis, parse_rational(args.at))))
    return OK


def cmd_cut(args) -> int:
    t = _load_tiling(args.input)
    _emit(args, jsonio.dumps_tiling(cut_tiling(t, args.axis, parse_rational(args.at), args.sign)))
    return OK


def cmd_separations(args) -> int:
    t = _load_tiling(args.input)
    ext = ExtendedTiling(t)
    _emit_json(args, [s.to_json(ext) for s in compute_separations(ext)])
    return OK


def cmd_perturb(args) -> int:
    t = _load_tiling(args.input)
    _emit_json(args, perturb_general_position(t).to_json())
    return OK


def cmd_graph(args) -> int:
    _emit(args, build_digraph(_load_tiling(args.input)).to_dot())
    return OK


def cmd_realizer(args) -> int:
    _emit_json(args, construct_realizer(_load_tiling(args.input)).to_json())
    return OK


def cmd_complex(args) -> int:
    _emit_json(args, build_complex(_load_tiling(args.input), include_exterior=args.exterior).to_json())
    return OK


def cmd_verify(args) -> int:
    c = _load_complex(args.complex)
    doc = jsonio.loads_any(_read(args.realizer))
    if not isinstance(doc, Realizer):
        raise UsageError("second argument must be a realizer document")
    ok, violation = verify_realizer(c, doc)
    out: dict = {"ok": ok}
    if violation is not None:
        out["violation"] = {"face": list(violation[0]), "vertex": violation[1]}
    _emit_json(args, out)
    return OK if ok else FALSE


def cmd_dmdim(args) -> int:
    c = _load_complex(args.input)
    k = dm_dimension(c, args.kmax, max_vertices=args.max_vertices, force=args.force)
    _emit(args, (str(k) if k is not None else "exceeds kmax") + "\n")
    return OK if k is not None else FALSE


def cmd_generate(args) -> int:
    t = random_proper(GenSpec(args.d, args.boxes, args.seed, max_retries=args.max_retries))
    if args.general_position:
        t = perturb_general_position(t).tiling
    _emit(args, jsonio.dumps_tiling(t))
    return OK


def cmd_collapse(args) -> int:
    t = _load_tiling(args.input)
    if args.general_position:
        t = perturb_general_position(t).tiling
    res = collapse_corner(t)
    _emit_json(args, {
        "removed": res.removed,
        "partner": res.partner,
        "axis": res.axis,
        "tiling": jsonio.tiling_to_obj(res.tiling),
        "origin": list(res.tiling.origin),
    })
    return OK


def cmd_render_svg(args) -> int:
    _emit(args, render_svg(_load_tiling(args.input), separations=args.separations))
    return OK


def cmd_fixture(args) -> int:
    _emit(args, jsonio.dumps_tiling(fixture(args.name, args.d)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiledim", description="Proper box tilings and their order dimension.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_, inp=True):
        p = sub.add_parser(name, help=help_)
        if inp:
            p.add_argument("input", nargs="?", default="-", help="tiling JSON file (default: stdin)")
        p.add_argument("-o", "--output", default="-", help="output file (default: stdout)")
        p.set_defaults(func=fn)
        return p

    add("validate", cmd_validate, "check that the boxes tile [-1,+1]^d")
    p = add("proper", cmd_proper, "check properness")
    p.add_argument("--method", choices=sorted(METHODS) + ["all"], default="all")
    for name, fn in (("slice", cmd_slice), ("cut", cmd_cut)):
        p = add(name, fn, f"{name} along a generic hyperplane")
        p.add_argument("--axis", type=int, required=True, help="1-based axis")
        p.add_argument("--at", required=True, help="rational coordinate, e.g. 1/3")
        if name == "cut":
            p.add_argument("--sign", choices=["-", "+"], required=True)
    add("separations", cmd_separations, "list separations as JSON")
    add("perturb", cmd_perturb, "move to general position")
    add("graph", cmd_graph, "dominance digraph in DOT format")
    add("realizer", cmd_realizer, "construct a realizer of d+1 orders")
    p = add("complex", cmd_complex, "maximal faces of the induced complex")
    p.add_argument("--exterior", action="store_true", help="also include the exterior boxes as vertices")
    p = add("verify", cmd_verify, "check a realizer against a complex (or a tiling)", inp=False)
    p.add_argument("complex", help="complex or tiling JSON")
    p.add_argument("realizer", help="realizer JSON")
    p = add("dmdim", cmd_dmdim, "brute-force Dushnik-Miller dimension of a complex (or a tiling's complex)")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=7)
    p.add_argument("--force", action="store_true", help="ignore the vertex limit")
    p = add("generate", cmd_generate, "random proper tiling", inp=False)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--boxes", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-retries", type=int, default=20)
    p.add_argument("--general-position", action="store_true")
    p = add("collapse", cmd_collapse, "remove the corner box (one step)")
    p.add_argument("--general-position", action="store_true", help="perturb to general position first")
    p = add("render-svg", cmd_render_svg, "SVG picture of a 2-tiling")
    p.add_argument("--separations", action="store_true")
    p = add("fixture", cmd_fixture, "print a named fixture", inp=False)
    p.add_argument("name", choices=FIXTURES)
    p.add_argument("--d", type=int, default=2)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PreconditionError) as exc:
        print(f"tiledim: error: {exc}", file=sys.stderr)
        return INVALID
    except (IntegrityError, GenerationError) as exc:
        print(f"tiledim: integrity error: {exc}", file=sys.stderr)
        return INTEGRITY
    except TilingError as exc:
        print(f"tiledim: error: {exc}", file=sys.stderr)
        return INVALID


run = main


if __name__ == "__main__":
    sys.exit(main())
