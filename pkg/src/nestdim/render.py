"""SVG and EPS output of nest scenes.

Every primitive is stroked with width ``2*eps`` and round caps, so a point is
drawn as an eps-disk and an arc as its eps-sausage.
"""
from __future__ import annotations

import math

from .nests import Scene

FORMAT_VERSION = 1
DEFAULT_SIZE = 600


def default_eps(size: int = DEFAULT_SIZE) -> float:
    """Half line width of 1/300 of the picture, expressed in world units."""
    return (size / 300) / (size / 2)


def _f(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _svg_arc(cx, cy, R, a0, a1):
    # SVG y axis points down, so counter-clockwise in the world is sweep-flag 0
    parts = []
    # split so no single arc command spans more than a half turn
    n = max(1, math.ceil((a1 - a0) / math.pi - 1e-12))
    for k in range(n):
        b0 = a0 + (a1 - a0) * k / n
        b1 = a0 + (a1 - a0) * (k + 1) / n
        x0, y0 = cx + R * math.cos(b0), cy - R * math.sin(b0)
        x1, y1 = cx + R * math.cos(b1), cy - R * math.sin(b1)
        parts.append(f"M{_f(x0)} {_f(y0)}A{_f(R)} {_f(R)} 0 0 0 {_f(x1)} {_f(y1)}")
    return "".join(parts)


def render_svg(scene: Scene, size: int = DEFAULT_SIZE) -> str:
    half = size / 2
    width = 2 * scene.eps * half
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<!-- nestdim render v{FORMAT_VERSION} eps={scene.eps:.6g} -->',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<g fill="none" stroke="black" stroke-width="{_f(width)}" '
        f'stroke-linecap="round" stroke-linejoin="round">',
    ]
    for p in scene.points:
        x = half + half * p.ring_radius * math.cos(p.angle)
        y = half - half * p.ring_radius * math.sin(p.angle)
        out.append(f'<path d="M{_f(x)} {_f(y)}h0"/>')
    for a in scene.arcs:
        out.append(f'<path d="{_svg_arc(half, half, half * a.ring_radius, a.angle_lo, a.angle_hi)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_eps(scene: Scene, size: int = DEFAULT_SIZE) -> str:
    half = size / 2
    width = 2 * scene.eps * half
    out = [
        "%!PS-Adobe-3.0 EPSF-3.0",
        f"%%BoundingBox: 0 0 {size} {size}",
        f"%%Creator: nestdim render v{FORMAT_VERSION}",
        "%%EndComments",
        f"{_f(width)} setlinewidth 1 setlinecap 1 setlinejoin",
    ]
    for p in scene.points:
        x = half + half * p.ring_radius * math.cos(p.angle)
        y = half + half * p.ring_radius * math.sin(p.angle)
        out.append(f"newpath {_f(x)} {_f(y)} moveto 0 0 rlineto stroke")
    for a in scene.arcs:
        out.append(
            f"newpath {_f(half)} {_f(half)} {_f(half * a.ring_radius)} "
            f"{_f(math.degrees(a.angle_lo))} {_f(math.degrees(a.angle_hi))} arc stroke"
        )
    out.append("showpage")
    out.append("%%EOF")
    return "\n".join(out) + "\n"


def render(scene: Scene, fmt: str = "svg", size: int = DEFAULT_SIZE) -> str:
    if fmt == "svg":
        return render_svg(scene, size)
    if fmt == "eps":
        return render_eps(scene, size)
    raise ValueError(f"unknown format {fmt!r}; expected svg or eps")
