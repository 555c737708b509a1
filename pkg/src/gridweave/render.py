"""Static SVG figures of 3D drawings via a fixed oblique projection."""

from __future__ import annotations

from .drawing import Embedding
from .graph import Graph

# screen = (x + 0.35 z, y + 0.20 z); purely presentational
OBLIQUE_X = 0.35
OBLIQUE_Y = 0.20

SVG_HEADER = '<?xml version="1.0" encoding="UTF-8"?>\n'


def project(p, scale: float) -> tuple[float, float]:
    x, y, z = p
    return (x + OBLIQUE_X * z) * scale, (y + OBLIQUE_Y * z) * scale


def render_svg(emb: Embedding, g: Graph | None = None, scale: float = 20.0, margin: float = 20.0) -> str:
    """Return an SVG document with one line per edge and one labeled circle per vertex.

    The y axis is flipped so that larger y is drawn higher on the page.
    """
    proj = [project(p, scale) for p in emb.points]
    if proj:
        xs = [p[0] for p in proj]
        ys = [p[1] for p in proj]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = 0.0
    width = x1 - x0 + 2 * margin
    height = y1 - y0 + 2 * margin

    def screen(p):
        return p[0] - x0 + margin, y1 - p[1] + margin

    out = [SVG_HEADER,
           f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
           f'viewBox="0 0 {width:.2f} {height:.2f}">\n',
           f'  <rect x="0" y="0" width="{width:.2f}" height="{height:.2f}" fill="white"/>\n']
    if g is not None:
        for u, v in g.edges:
            (ax, ay), (bx, by) = screen(proj[u]), screen(proj[v])
            out.append(f'  <line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                       f'stroke="grey" stroke-width="1"/>\n')
    for v, p in enumerate(proj):
        cx, cy = screen(p)
        x, y, z = emb.points[v]
        out.append(f'  <circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" stroke="black" '
                   f'stroke-width="1" fill="red"><title>{v}: ({x}, {y}, {z})</title></circle>\n')
        out.append(f'  <text x="{cx + 5:.2f}" y="{cy - 5:.2f}" font-family="sans-serif" '
                   f'font-size="10">{v}</text>\n')
    out.append("</svg>\n")
    return "".join(out)
