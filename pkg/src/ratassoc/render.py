"""Static SVG rendering of a face as a polygon dissection.

Boundary points sit on a circle, labeled clockwise with 0 at the top to
match the labeling convention of the diagonal coordinates.  Output is a
deterministic string: coordinates are rounded to fixed precision and
elements are emitted in canonical order.
"""

from __future__ import annotations

import math
from typing import Iterable

from .complexes import face_key
from .polygon import Diagonal


def _point(p: int, b: int, cx: float, cy: float, radius: float) -> tuple[float, float]:
    # clockwise from the top; the SVG y-axis already points down
    theta = math.pi / 2 - 2 * math.pi * p / (b + 1)
    return (cx + radius * math.cos(theta), cy - radius * math.sin(theta))


def face_svg(face: Iterable[Diagonal], b: int, size: int = 400) -> str:
    """An SVG drawing of the (b+1)-gon with the face's chords."""
    face = list(face)
    for d in face:
        if d.b != b:
            raise ValueError(f"diagonal {d} lives on b={d.b}, not b={b}")
    cx = cy = size / 2.0
    radius = size * 0.42
    pts = {p: _point(p, b, cx, cy, radius) for p in range(b + 1)}
    fmt = lambda v: f"{v:.2f}"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'  <circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(radius)}" '
        'fill="none" stroke="#cccccc" stroke-width="1"/>',
    ]
    boundary = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in (pts[p] for p in range(b + 1)))
    lines.append(f'  <polygon points="{boundary}" fill="none" stroke="#444444" stroke-width="1"/>')
    for j, i in face_key(face):
        (x1, y1), (x2, y2) = pts[i], pts[j]
        lines.append(
            f'  <line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            'stroke="#c0392b" stroke-width="2"/>'
        )
    for p in range(b + 1):
        x, y = _point(p, b, cx, cy, radius * 1.09)
        lines.append(
            f'  <text x="{fmt(x)}" y="{fmt(y)}" font-size="{size // 25}" '
            f'text-anchor="middle" dominant-baseline="middle">{p}</text>'
        )
        x, y = pts[p]
        lines.append(f'  <circle cx="{fmt(x)}" cy="{fmt(y)}" r="2.5" fill="#444444"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
