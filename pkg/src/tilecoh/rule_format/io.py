"""JSON (de)serialization of tiling systems.

Rationals are written as strings ``"p/q"`` (or plain integers) so nothing
passes through floating point.  A field element is a list of ``deg(m)``
rationals in the power basis of the declared field.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema

from ..exact_algebra.group_ring import GroupRingElement
from ..exact_algebra.numbers import FieldError, NumberField
from ..tiling_model.geometry import Motion, Vec
from ..tiling_model.system import Placement, ProtoTile, SubstitutionRule, TilingSystem

FORMAT_VERSION = 1

_RAT = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}]}
_COEFFS = {"type": "array", "items": _RAT, "minItems": 1}
_POINT = {"type": "array", "items": _COEFFS, "minItems": 2, "maxItems": 2}
_GR = {"type": "array", "items": {"type": "integer"}}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _GR}}
_CELLS = {"type": "array", "items": {
    "type": "object", "required": ["name"],
    "properties": {"name": {"type": "string"}, "orbit": {"type": "integer", "minimum": 1},
                   "sign": {"enum": [1, -1]}},
    "additionalProperties": False}}

SCHEMA = {
    "type": "object",
    "required": ["name"],
    "properties": {
        "format_version": {"type": "integer"},
        "name": {"type": "string"},
        "notes": {"type": "string"},
        "field": {
            "type": "object", "required": ["min_poly"],
            "properties": {"min_poly": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
                           "generator_interval": {"type": "array", "items": _RAT, "minItems": 2, "maxItems": 2}},
            "additionalProperties": False,
        },
        "prototiles": {"type": "array", "minItems": 1, "items": {
            "type": "object", "required": ["id", "vertices"],
            "properties": {"id": {"type": "string"},
                           "vertices": {"type": "array", "items": _POINT, "minItems": 3},
                           "edge_labels": {"type": "array", "items": {"type": "string"}}},
            "additionalProperties": False}},
        "substitution": {
            "type": "object", "required": ["linear_factor", "placements"],
            "properties": {
                "linear_factor": _COEFFS,
                "placements": {"type": "object", "additionalProperties": {"type": "array", "items": {
                    "type": "object", "required": ["child", "rotation", "translation"],
                    "properties": {"child": {"type": "string"}, "rotation": _POINT,
                                   "translation": _POINT, "reflect": {"type": "boolean"}},
                    "additionalProperties": False}}},
            },
            "additionalProperties": False,
        },
        "combinatorial": {
            "type": "object", "required": ["group_order", "cells", "boundary_matrices"],
            "properties": {
                "group_order": {"type": "integer", "minimum": 1},
                "cells": {"type": "object", "required": ["faces", "edges", "vertices"],
                          "properties": {"faces": _CELLS, "edges": _CELLS, "vertices": _CELLS},
                          "additionalProperties": False},
                "boundary_matrices": {"type": "object", "required": ["1", "2"],
                                      "properties": {"1": _MATRIX, "2": _MATRIX},
                                      "additionalProperties": False},
                "substitution_matrices": {"type": "object",
                                          "properties": {"0": _MATRIX, "1": _MATRIX, "2": _MATRIX},
                                          "additionalProperties": False},
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}


class RuleFormatError(ValueError):
    """Malformed tiling-system document; ``path`` locates the offending value."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class CombinatorialComplexSpec:
    """Cells and matrices of an Anderson-Putnam complex given directly."""

    name: str
    group_order: int
    faces: list  # of (name, orbit, sign)
    edges: list
    vertices: list
    boundary: dict  # degree -> matrix of GroupRingElement
    substitution: dict
    notes: str = ""
    mode: str = field(default="combinatorial")


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _rat(v) -> Fraction:
    return Fraction(v) if isinstance(v, int) else Fraction(v.replace(" ", ""))


def _fmt(q) -> str | int:
    q = Fraction(int(q.numerator), int(q.denominator))
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_system(text) -> TilingSystem | CombinatorialComplexSpec:
    """Parse and validate a ``.tsys.json`` document (bytes or str)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise RuleFormatError(f"not UTF-8 ({e.reason} at byte {e.start})")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise RuleFormatError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})")
    errors = sorted(jsonschema.Draft7Validator(SCHEMA).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise RuleFormatError(e.message, _path(e.absolute_path))
    has_geo = "prototiles" in doc or "substitution" in doc
    if has_geo and "combinatorial" in doc:
        raise RuleFormatError("geometric and combinatorial blocks are mutually exclusive")
    if "combinatorial" in doc:
        return _parse_combinatorial(doc)
    for key in ("field", "prototiles", "substitution"):
        if key not in doc:
            raise RuleFormatError(f"missing required key {key!r}")
    return _parse_geometric(doc)


def _parse_geometric(doc) -> TilingSystem:
    fd = doc["field"]
    iv = fd.get("generator_interval")
    try:
        K = NumberField(fd["min_poly"], tuple(_rat(x) for x in iv) if iv is not None else None)
    except FieldError as e:
        raise RuleFormatError(str(e), "$.field")
    if K.interval is None:
        raise RuleFormatError("geometric systems need a real generator_interval", "$.field")
    n = K.degree

    def elem(v, where):
        if len(v) != n:
            raise RuleFormatError(f"coefficient vector of length {len(v)}, field degree is {n}", where)
        return K([_rat(x) for x in v])

    def point(p, where):
        return Vec(elem(p[0], where + "[0]"), elem(p[1], where + "[1]"))

    protos = {}
    for i, pt in enumerate(doc["prototiles"]):
        where = f"$.prototiles[{i}]"
        if pt["id"] in protos:
            raise RuleFormatError(f"duplicate prototile id {pt['id']!r}", where + ".id")
        vs = tuple(point(v, f"{where}.vertices[{k}]") for k, v in enumerate(pt["vertices"]))
        labels = tuple(pt.get("edge_labels") or ["e"] * len(vs))
        if len(labels) != len(vs):
            raise RuleFormatError("edge_labels must have one entry per edge", where + ".edge_labels")
        proto = ProtoTile(pt["id"], vs, labels)
        if proto.area().sign() <= 0:
            raise RuleFormatError("polygon must be counterclockwise with positive area", where + ".vertices")
        protos[pt["id"]] = proto
    sub = doc["substitution"]
    c = elem(sub["linear_factor"], "$.substitution.linear_factor")
    placements = {}
    for t, pls in sub["placements"].items():
        where = f"$.substitution.placements.{t}"
        if t not in protos:
            raise RuleFormatError(f"placements for unknown tile id {t!r}", where)
        out = []
        for k, pl in enumerate(pls):
            w = f"{where}[{k}]"
            if pl["child"] not in protos:
                raise RuleFormatError(f"unknown child tile id {pl['child']!r}", w + ".child")
            rot = point(pl["rotation"], w + ".rotation")
            if rot.norm2() != K.one:
                raise RuleFormatError("rotation is not a unit vector", w + ".rotation")
            out.append(Placement(pl["child"], Motion(rot, point(pl["translation"], w + ".translation"),
                                                     pl.get("reflect", False))))
        placements[t] = tuple(out)
    missing = [t for t in protos if t not in placements]
    if missing:
        raise RuleFormatError(f"no placements for tile ids {missing}", "$.substitution.placements")
    return TilingSystem(doc["name"], K, protos, SubstitutionRule(c, placements), "geometric",
                        doc.get("notes", ""))


def _parse_combinatorial(doc) -> CombinatorialComplexSpec:
    cb = doc["combinatorial"]
    N = cb["group_order"]

    def cells(kind):
        out = []
        for c in cb["cells"][kind]:
            orbit = c.get("orbit", N)
            if N % orbit:
                raise RuleFormatError(f"orbit size {orbit} does not divide {N}", f"$.combinatorial.cells.{kind}")
            out.append((c["name"], orbit, c.get("sign", 1)))
        return out

    faces, edges, verts = cells("faces"), cells("edges"), cells("vertices")
    dims = {0: len(verts), 1: len(edges), 2: len(faces)}

    def matrix(M, rows, cols, where):
        if len(M) != rows or any(len(r) != cols for r in M):
            raise RuleFormatError(f"expected a {rows}x{cols} matrix", where)
        out = []
        for i, r in enumerate(M):
            row = []
            for j, e in enumerate(r):
                if len(e) != N:
                    raise RuleFormatError(f"group ring entry needs {N} coefficients", f"{where}[{i}][{j}]")
                row.append(GroupRingElement(e))
            out.append(row)
        return out

    bd = {k: matrix(cb["boundary_matrices"][str(k)], dims[k - 1], dims[k], f"$.combinatorial.boundary_matrices.{k}")
          for k in (1, 2)}
    sb = {int(k): matrix(M, dims[int(k)], dims[int(k)], f"$.combinatorial.substitution_matrices.{k}")
          for k, M in cb.get("substitution_matrices", {}).items()}
    return CombinatorialComplexSpec(doc["name"], N, faces, edges, verts, bd, sb, doc.get("notes", ""))


def serialize_system(sys) -> bytes:
    """Canonical JSON bytes; ``parse_system(serialize_system(s))`` reproduces ``s``."""
    doc = {"format_version": FORMAT_VERSION, "name": sys.name}
    if sys.notes:
        doc["notes"] = sys.notes
    if isinstance(sys, CombinatorialComplexSpec):
        def cells(cs):
            out = []
            for name, orbit, sign in cs:
                d = {"name": name, "orbit": orbit}
                if sign != 1:
                    d["sign"] = sign
                out.append(d)
            return out
        doc["combinatorial"] = {
            "group_order": sys.group_order,
            "cells": {"faces": cells(sys.faces), "edges": cells(sys.edges), "vertices": cells(sys.vertices)},
            "boundary_matrices": {str(k): [[e.to_json() for e in r] for r in M] for k, M in sorted(sys.boundary.items())},
            "substitution_matrices": {str(k): [[e.to_json() for e in r] for r in M]
                                      for k, M in sorted(sys.substitution.items())},
        }
    else:
        K = sys.field
        fd = {"min_poly": [int(c) for c in reversed(K.modulus)]}
        if K.declared_interval is not None:
            fd["generator_interval"] = [_fmt(q) for q in K.declared_interval]
        doc["field"] = fd

        def elem(x):
            return [_fmt(c) for c in x.c]

        def point(p):
            return [elem(p.x), elem(p.y)]

        doc["prototiles"] = [{"id": t.id, "vertices": [point(v) for v in t.vertices],
                              "edge_labels": list(t.edge_labels)} for t in sys.prototiles.values()]
        doc["substitution"] = {
            "linear_factor": elem(sys.c),
            "placements": {t: [{"child": p.child, "rotation": point(p.motion.rot),
                                "translation": point(p.motion.trans), "reflect": p.motion.reflect}
                               for p in pls] for t, pls in sys.rule.placements.items()},
        }
    return (dumps_compact(doc) + "\n").encode("utf-8")


def dumps_compact(doc, indent: int = 1) -> str:
    """``json.dumps`` with indentation, but lists of scalars (and lists of those) kept on one line."""
    def flat(v):
        if isinstance(v, list):
            return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and flat(x)) for x in v)
        return False

    def enc(v, level):
        pad = " " * (indent * (level + 1))
        if isinstance(v, dict):
            if not v:
                return "{}"
            items = [f"{pad}{json.dumps(k)}: {enc(x, level + 1)}" for k, x in v.items()]
            return "{\n" + ",\n".join(items) + "\n" + " " * (indent * level) + "}"
        if isinstance(v, list) and not flat(v):
            items = [pad + enc(x, level + 1) for x in v]
            return "[\n" + ",\n".join(items) + "\n" + " " * (indent * level) + "]"
        return json.dumps(v, separators=(", ", ": "))

    return enc(doc, 0)


def systems_equal(a, b) -> bool:
    """Structural equality of two parsed systems."""
    if type(a) is not type(b) or a.name != b.name:
        return False
    if isinstance(a, CombinatorialComplexSpec):
        return (a.group_order == b.group_order and a.faces == b.faces and a.edges == b.edges
                and a.vertices == b.vertices and a.boundary == b.boundary and a.substitution == b.substitution)
    if a.field._key != b.field._key or list(a.prototiles.values()) != list(b.prototiles.values()):
        return False
    if a.c != b.c or list(a.rule.placements) != list(b.rule.placements):
        return False
    for t in a.rule.placements:
        pa, pb = a.rule.placements[t], b.rule.placements[t]
        if len(pa) != len(pb) or any(x.child != y.child or x.motion.key() != y.motion.key() for x, y in zip(pa, pb)):
            return False
    return True


# --------------------------------------------------------------------------
# fixtures

_FIXTURES = ("chair", "penrose_triangles", "pinwheel", "pinwheel_2_3", "penrose_combinatorial", "square")


def fixture_names() -> tuple[str, ...]:
    return _FIXTURES


def fixture_path(name: str) -> Path:
    if name not in _FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(_FIXTURES)}")
    return Path(str(resources.files("tilecoh.fixtures").joinpath(f"{name}.tsys.json")))


def fixture(name: str):
    return parse_system(fixture_path(name).read_bytes())


def load(path) -> TilingSystem | CombinatorialComplexSpec:
    p = Path(path)
    if not p.exists() and str(path) in _FIXTURES:
        return fixture(str(path))
    return parse_system(p.read_bytes())
