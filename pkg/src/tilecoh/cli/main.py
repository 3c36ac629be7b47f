"""``tilecoh`` command line: validate, complex, cohomology, invariant, compare, render."""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from ..cohomology import cochain_complex, cohomology_groups, limit_cohomology, top_cohomology_all_orientation
from ..complex_builder import (ComplexError, CoronaError, corona_counts, enumerate_coronas, orientation_group,
                               sigma_complex)
from ..exact_algebra.perron import NotPrimitiveError
from ..order_invariant import compare_invariants, ordered_invariant
from ..rule_format import CombinatorialComplexSpec, RuleFormatError, fixture_path, parse_system
from ..tiling_model.system import TilingSystemError, split_edges, validate_system
from .render import precision, render_svg

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DISTINGUISHED = 10
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66
EXIT_SOFTWARE = 70


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> tuple[bytes, str]:
    p = Path(path)
    if not p.exists():
        try:
            p = fixture_path(path)
        except (KeyError, FileNotFoundError):
            raise CliError(f"{path}: no such file or fixture", EXIT_NOINPUT)
    return p.read_bytes(), str(path)


def _load(path: str):
    data, label = _read(path)
    try:
        sys_ = parse_system(data)
    except RuleFormatError as e:
        where = f" at {e.path}" if getattr(e, "path", None) else ""
        raise CliError(f"{label}: {e}{where}", EXIT_DATA)
    return sys_, {"path": label, "sha256": hashlib.sha256(data).hexdigest(), "name": sys_.name}


def _report(command: str, inputs: list, results, caveats=()) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs,
            "results": results, "caveats": list(caveats)}


def _geometric(sys_, what: str):
    if isinstance(sys_, CombinatorialComplexSpec):
        raise CliError(f"{what} needs a geometric system; {sys_.name} is combinatorial", EXIT_DATA)
    return sys_


# --------------------------------------------------------------------------
# commands

def cmd_validate(args) -> tuple[dict, int]:
    sys_, inp = _load(args.path)
    if isinstance(sys_, CombinatorialComplexSpec):
        cx = sigma_complex(sys_, "x").complex
        chk = cx.check()
        res = {"kind": "combinatorial", "identities": chk}
        return _report("validate", [inp], res), EXIT_OK if chk["ok"] else EXIT_DATA
    raw = validate_system(sys_)
    res = {"kind": "geometric", "as_given": raw.to_json()}
    ok = raw.ok
    caveats = []
    if not raw.ok:
        split = validate_system(split_edges(sys_))
        res["after_edge_split"] = split.to_json()
        ok = split.ok
        if ok:
            caveats.append("valid after splitting edges at neighbouring vertices")
    res["ok"] = ok
    return _report("validate", [inp], res, caveats), EXIT_OK if ok else EXIT_DATA


def cmd_complex(args) -> tuple[dict, int]:
    sys_, inp = _load(args.path)
    built = sigma_complex(sys_, args.variant, collared=args.collar)
    cx = built.complex
    res = {"complex": cx.to_json(), "ranks": {"faces": len(cx.faces), "edges": len(cx.edges),
                                              "vertices": len(cx.vertices)},
           "identities": cx.check()}
    if built.split is not None:
        G = orientation_group(built.split)
        res["orientation_group"] = G.to_json()
        cs = built.collared.coronas if built.collared is not None else enumerate_coronas(built.split)
        res["corona_counts"] = corona_counts(built.split, cs, G)
    return _report("complex", [inp], res), EXIT_OK


def cmd_cohomology(args) -> tuple[dict, int]:
    sys_, inp = _load(args.path)
    cx = sigma_complex(sys_, args.variant, collared=args.collar).complex
    cc = cochain_complex(cx)
    if args.coefficients == "Z":
        rep = limit_cohomology(cc)
    else:
        rep = cohomology_groups(cc, args.coefficients)
    res = {"approximant": rep.to_json()}
    if args.variant == "0":
        res["H3_all_orientations"] = top_cohomology_all_orientation(rep)
    return _report("cohomology", [inp], res, rep.caveats), EXIT_OK


def cmd_invariant(args) -> tuple[dict, int]:
    sys_, inp = _load(args.path)
    inv = ordered_invariant(sigma_complex(sys_, "0", collared=args.collar).complex, sys_.name)
    return _report("invariant", [inp], inv.to_json()), EXIT_OK


def cmd_compare(args) -> tuple[dict, int]:
    a, ia = _load(args.a)
    b, ib = _load(args.b)
    inv_a = ordered_invariant(sigma_complex(a, "0", collared=args.collar).complex, a.name)
    inv_b = ordered_invariant(sigma_complex(b, "0", collared=args.collar).complex, b.name)
    v = compare_invariants(inv_a, inv_b)
    caveats = ["necessary condition only: agreeing invariants do not imply homeomorphic spaces"]
    return _report("compare", [ia, ib], v.to_json(), caveats), (EXIT_DISTINGUISHED if v.distinguished else EXIT_OK)


def cmd_render(args) -> tuple[dict, int]:
    sys_, inp = _load(args.path)
    _geometric(sys_, "render")
    tile = args.tile or sys_.types[0]
    digits = precision()
    svg, count = render_svg(sys_, tile, args.level, digits)
    Path(args.out).write_text(svg, encoding="utf-8")
    res = {"out": args.out, "tile": tile, "level": args.level, "polygons": count,
           "svg_sha256": hashlib.sha256(svg.encode()).hexdigest()}
    caveats = [f"SVG coordinates rounded to {digits} decimal digits (presentation only)"]
    return _report("render", [inp], res, caveats), EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tilecoh", description=__doc__)
    p.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
    p.add_argument("-o", "--output", help="write the JSON report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def collar_flag(sp):
        sp.add_argument("--collar", dest="collar", action="store_true", default=True,
                        help="build from collared tiles (default)")
        sp.add_argument("--no-collar", dest="collar", action="store_false",
                        help="build from the tiles as given")

    sp = sub.add_parser("validate", help="check the substitution conditions")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("complex", help="build the Anderson-Putnam complex")
    sp.add_argument("path")
    sp.add_argument("--variant", choices=["x", "0"], default="0")
    collar_flag(sp)
    sp.set_defaults(func=cmd_complex)

    sp = sub.add_parser("cohomology", help="cohomology of the complex and of the tiling space")
    sp.add_argument("path")
    sp.add_argument("--variant", choices=["x", "0"], default="0")
    sp.add_argument("--coefficients", default="Z", help="'Z' or a divisor d of the group order")
    collar_flag(sp)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("invariant", help="Perron eigenvalue and image of the order functional")
    sp.add_argument("path")
    collar_flag(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("compare", help="compare two systems (exit 10 when distinguished)")
    sp.add_argument("a")
    sp.add_argument("b")
    collar_flag(sp)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("render", help="draw a supertile as SVG")
    sp.add_argument("path")
    sp.add_argument("--tile")
    sp.add_argument("--level", type=int, default=3)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except CliError as e:
        print(f"tilecoh: {e}", file=sys.stderr)
        return e.code
    except (ComplexError, CoronaError, NotPrimitiveError, TilingSystemError, ValueError) as e:
        print(f"tilecoh: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    except Exception as e:  # noqa: BLE001 - last-resort diagnostics
        print(f"tilecoh: internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_SOFTWARE
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - t0, 3)
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
