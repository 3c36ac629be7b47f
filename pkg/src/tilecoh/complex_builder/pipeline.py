"""From a loaded system to its Anderson-Putnam complex, with memoization by content."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from ..rule_format.io import CombinatorialComplexSpec, serialize_system
from ..tiling_model.system import TilingSystem, split_edges
from .complex import APComplex, build_complex, complex_from_spec, quotient_complex
from .coronas import CollaredSystem, collar, enumerate_coronas
from .orientation import orientation_group

_CACHE: dict = {}


def content_hash(sys) -> str:
    return hashlib.sha256(serialize_system(sys)).hexdigest()


@dataclass
class Built:
    """A complex together with the intermediate objects that produced it."""

    complex: APComplex
    collared: CollaredSystem | None
    split: TilingSystem | None
    source_hash: str


def sigma_complex(sys, variant: str = "0", collared: bool = True) -> Built:
    """``Sigma_0`` or ``Sigma_x`` of a system.

    Geometric systems get their edges split at vertices of neighbours first;
    with ``collared=True`` the complex is built from collared tiles, which
    always forces the border.  A combinatorial spec already is ``Sigma_x``;
    its ``Sigma_0`` is the ``t = 1`` quotient.
    """
    h = content_hash(sys)
    key = (h, variant, collared)
    if key in _CACHE:
        return _CACHE[key]
    if isinstance(sys, CombinatorialComplexSpec):
        cx = complex_from_spec(sys)
        if variant == "0":
            cx = quotient_complex(cx)
        out = Built(cx, None, None, h)
    else:
        s = split_edges(sys)
        if variant == "x" and not orientation_group(s).finite:
            # the builder raises a ComplexError with the reason
            build_complex(s, "x")
        if collared:
            col = collar(s, enumerate_coronas(s))
            out = Built(build_complex(col, variant), col, s, h)
        else:
            out = Built(build_complex(s, variant), None, s, h)
    _CACHE[key] = out
    return out


def clear_cache() -> None:
    _CACHE.clear()
