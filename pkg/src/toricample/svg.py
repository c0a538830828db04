"""Deterministic SVG pictures of 2-dimensional fans and their polytopes."""
from __future__ import annotations

from typing import Sequence

from .errors import FanError
from .fan import Fan
from .polytope import polytope_from_divisor

UNIT = 40

_HEAD = (
    '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x} {y} {w} {h}" width="{w}" height="{h}">\n'
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
    "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n"
)


def _px(p) -> tuple[int, int]:
    # lattice y points up, SVG y points down
    return int(p[0] * UNIT), int(-p[1] * UNIT)


def render_svg(fan: Fan, divisor: Sequence[int] | None = None) -> str:
    if fan.dim != 2:
        raise FanError("rendering supports dimension 2 only")
    P = polytope_from_divisor(fan, divisor) if divisor is not None else None
    # arrows run to 1.5 * v; keep pixel coordinates integral
    tips = [(3 * x, 3 * y) for x, y in fan.rays]
    extent = max(max(abs(c) for t in tips for c in t) // 2 + 1, 1)
    if P is not None:
        extent = max(extent, max(abs(c) for p in P.vertex_list() for c in p))
    half = (extent + 1) * UNIT
    out = [_HEAD.format(x=-half, y=-half, w=2 * half, h=2 * half)]
    out.append('<g stroke="#d3d3d3" stroke-width="1">\n')
    for k in range(-extent - 1, extent + 2):
        out.append(f'<line x1="{k * UNIT}" y1="{-half}" x2="{k * UNIT}" y2="{half}"/>\n')
        out.append(f'<line x1="{-half}" y1="{k * UNIT}" x2="{half}" y2="{k * UNIT}"/>\n')
    out.append("</g>\n")
    if P is not None:
        (face,) = P.two_faces.values()
        pts = " ".join("{},{}".format(*_px(P.vertices[c])) for c in face.vertices)
        out.append(f'<polygon points="{pts}" fill="#cfe2f3" stroke="#000000" stroke-width="2"/>\n')
        for c in face.vertices:
            x, y = _px(P.vertices[c])
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="#0000ff"/>\n')
            out.append(f'<text x="{x + 6}" y="{y - 6}" font-size="12" fill="#0000ff">p_σ{c}</text>\n')
    for k, (t, v) in enumerate(zip(tips, fan.rays)):
        tx, ty = t[0] * UNIT // 2, -t[1] * UNIT // 2
        vx, vy = _px(v)
        out.append(f'<line x1="0" y1="0" x2="{tx}" y2="{ty}" stroke="#000000" stroke-width="2" '
                   f'marker-end="url(#arrow)"/>\n')
        out.append(f'<circle cx="{vx}" cy="{vy}" r="3" fill="#000000"/>\n')
        out.append(f'<text x="{tx + 4}" y="{ty + 4}" font-size="12">v{k}</text>\n')
    out.append('<circle cx="0" cy="0" r="5" fill="#000000"/>\n</svg>\n')
    return "".join(out)
