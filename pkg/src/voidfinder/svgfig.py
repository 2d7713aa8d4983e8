"""Deterministic single-file SVG rendering of a run's geometry.

Layers (each its own <g id=...>): cloud points, hull outline, top scored
segments, the DV point marker, and the void polygon. The viewBox fits the
cloud bounds with a 5% margin. Output depends only on the inputs, so
identical runs write identical bytes.
"""

from __future__ import annotations

from .geom import PointCloud, Polygon
from .report import atomic_write_text

LAYERS = ("points", "hull", "segments", "dv", "polygon")

_WIDTH = 720.0


def _fmt(v: float) -> str:
    return format(v, ".3f")


class _Canvas:
    def __init__(self, cloud: PointCloud):
        xs = cloud.xs
        ys = cloud.ys
        minx, maxx = float(xs.min()), float(xs.max())
        miny, maxy = float(ys.min()), float(ys.max())
        w = maxx - minx or 1.0
        h = maxy - miny or 1.0
        minx -= 0.05 * w
        maxx += 0.05 * w
        miny -= 0.05 * h
        maxy += 0.05 * h
        self.scale = _WIDTH / (maxx - minx)
        self.minx = minx
        self.maxy = maxy
        self.width = _WIDTH
        self.height = (maxy - miny) * self.scale

    def xy(self, x: float, y: float) -> tuple[str, str]:
        return (
            _fmt((x - self.minx) * self.scale),
            _fmt((self.maxy - y) * self.scale),  # flip: SVG y grows downward
        )


def render_svg(
    cloud: PointCloud,
    hull=None,
    segments=None,
    dv_xy=None,
    polygon: Polygon | None = None,
    layers=LAYERS,
) -> str:
    canvas = _Canvas(cloud)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(canvas.width)}" height="{_fmt(canvas.height)}" '
        f'viewBox="0 0 {_fmt(canvas.width)} {_fmt(canvas.height)}">',
    ]
    r_pt = _fmt(canvas.width * 0.004)

    def path_for(coords, close=True) -> str:
        parts = []
        for idx, (x, y) in enumerate(coords):
            sx, sy = canvas.xy(x, y)
            parts.append(f"{'M' if idx == 0 else 'L'} {sx} {sy}")
        if close:
            parts.append("Z")
        return " ".join(parts)

    if "points" in layers:
        out.append('<g id="points" fill="#444444">')
        for x, y in cloud.coords:
            sx, sy = canvas.xy(x, y)
            out.append(f'<circle class="pt" cx="{sx}" cy="{sy}" r="{r_pt}"/>')
        out.append("</g>")
    if "hull" in layers and hull:
        coords = [(cloud.coords[i, 0], cloud.coords[i, 1]) for i in hull]
        out.append('<g id="hull" fill="none" stroke="#1f77b4" stroke-width="1">')
        out.append(f'<path class="hull" d="{path_for(coords)}"/>')
        out.append("</g>")
    if "segments" in layers and segments:
        out.append('<g id="segments" stroke="#999999" stroke-width="0.7">')
        for i, j in segments:
            x1, y1 = canvas.xy(cloud.coords[i, 0], cloud.coords[i, 1])
            x2, y2 = canvas.xy(cloud.coords[j, 0], cloud.coords[j, 1])
            out.append(
                f'<line class="seg" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'
            )
        out.append("</g>")
    if "dv" in layers and dv_xy is not None:
        sx, sy = canvas.xy(dv_xy[0], dv_xy[1])
        r_dv = _fmt(canvas.width * 0.008)
        out.append('<g id="dv" fill="none" stroke="#d62728" stroke-width="1.5">')
        out.append(f'<circle class="dv" cx="{sx}" cy="{sy}" r="{r_dv}"/>')
        out.append("</g>")
    if "polygon" in layers and polygon is not None:
        coords = [(v.x, v.y) for v in polygon.vertices]
        out.append(
            '<g id="polygon" fill="#2ca02c" fill-opacity="0.15" '
            'stroke="#2ca02c" stroke-width="1.2">'
        )
        out.append(f'<path class="mie" d="{path_for(coords)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def save_svg(path: str, *args, **kwargs) -> None:
    atomic_write_text(path, render_svg(*args, **kwargs))
