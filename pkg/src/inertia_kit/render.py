"""Text and SVG pictures of inertia sets (pi to the right, nu upwards)."""

from __future__ import annotations

from .algebra import InertiaSet

__all__ = ["render_ascii", "render_svg"]

MEMBER = "•"
OTHER = "·"


def _extent(s: InertiaSet) -> int:
    # Side = largest rank + 1, so the whole triangle p + q <= rank fits.
    return s.max_rank + 1 if s else 1


def render_ascii(s: InertiaSet, size: int | None = None, axes: bool = False) -> str:
    """Square grid of side ``size`` (default: largest rank + 1), origin bottom-left."""
    size = size or _extent(s)
    rows = []
    for q in range(size - 1, -1, -1):
        cells = " ".join(MEMBER if (p, q) in s.points else OTHER for p in range(size))
        rows.append(f"{q:>2} {cells}" if axes else cells)
    if axes:
        rows.append("   " + " ".join(str(p % 10) for p in range(size)))
    return "\n".join(rows)


def render_svg(s: InertiaSet, cell: int = 20, size: int | None = None) -> str:
    size = size or _extent(s)
    side = size * cell
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}">',
        f'<rect x="0" y="0" width="{side}" height="{side}" fill="white" stroke="black"/>',
    ]
    for p, q in sorted(s.points):
        if p >= size or q >= size:
            continue
        x, y = p * cell, (size - 1 - q) * cell
        out.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="black">'
                   f'<title>({p},{q})</title></rect>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
