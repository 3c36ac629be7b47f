"""SVG drawings of supertiles; coordinates stay exact until serialization."""
from __future__ import annotations

import os

from ..tiling_model.system import TilingSystem, supertile

DEFAULT_PRECISION = 12
PALETTE = ["#e8c872", "#8fb8de", "#d98c8c", "#9fcf9f", "#c2a3d6", "#f0a868", "#7fc6bc", "#d6d67a"]


def precision() -> int:
    """Decimal digits for SVG coordinates (``TILECOH_PRECISION``, default 12)."""
    raw = os.environ.get("TILECOH_PRECISION", "")
    if not raw:
        return DEFAULT_PRECISION
    p = int(raw)
    if not 1 <= p <= 30:
        raise ValueError("TILECOH_PRECISION must be between 1 and 30")
    return p


def _fmt(x: float, digits: int) -> str:
    s = f"{x:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(sys: TilingSystem, tile: str, level: int, digits: int | None = None) -> tuple[str, int]:
    """SVG text for ``phi^level tile`` and the number of polygons drawn."""
    if sys.mode != "geometric":
        raise ValueError("rendering needs a geometric system")
    if tile not in sys.prototiles:
        raise ValueError(f"unknown tile {tile!r}; expected one of {sys.types}")
    digits = precision() if digits is None else digits
    patch = supertile(sys, tile, level)
    polys = [[(float(v.x), float(v.y)) for v in pt.vertices] for pt in patch.tiles]
    xs = [x for p in polys for x, _ in p]
    ys = [y for p in polys for _, y in p]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    pad = 0.02 * max(x1 - x0, y1 - y0)
    w, h = x1 - x0 + 2 * pad, y1 - y0 + 2 * pad
    stroke = _fmt(0.002 * max(w, h), digits)
    cls = {t: i for i, t in enumerate(sys.types)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0 - pad, digits)} {_fmt(-y1 - pad, digits)} '
        f'{_fmt(w, digits)} {_fmt(h, digits)}" data-system="{sys.name}" data-tile="{tile}" '
        f'data-level="{level}" data-precision="{digits}">',
        "<style>",
        f"polygon {{ stroke: #333; stroke-width: {stroke}; stroke-linejoin: round; }}",
    ]
    for t, i in cls.items():
        lines.append(f".t{i} {{ fill: {PALETTE[i % len(PALETTE)]}; }}")
    lines.append("</style>")
    for pt, p in zip(patch.tiles, polys):
        # y flipped so the picture has the usual orientation
        pts = " ".join(f"{_fmt(x, digits)},{_fmt(-y, digits)}" for x, y in p)
        lines.append(f'<polygon class="t{cls[pt.type]}" data-type="{pt.type}" points="{pts}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n", len(polys)
