"""ASCII and SVG pictures of regions.

Lattice point (p, q) sits at (p + q/2, q*sqrt(3)/2) in the plane.  The SVG
view box is fixed by the cell set alone, so equal regions give equal files.
"""
from __future__ import annotations

from math import sqrt

from .lattice import UP, Region

_H = sqrt(3) / 2


def render_ascii(r: Region) -> str:
    """One text row per lattice row, top row first; ``^`` up, ``v`` down, ``.`` outside.

    Column k holds the cell centred at doubled x-coordinate k, so the picture
    keeps the triangular geometry.  Cells touching a weighted lozenge are
    drawn as ``A`` / ``V``.
    """
    if not r.cells:
        return "(empty region)\n"
    weighted = {c for k in r.weights for c in k}

    def col(c):
        return 2 * c.i + c.j + (1 if c.o == UP else 2)

    cols = [col(c) for c in r.cells]
    c0, c1 = min(cols), max(cols)
    j0, j1 = min(c.j for c in r.cells), max(c.j for c in r.cells)
    grid = {(c.j, col(c)): c for c in r.cells}
    lines = []
    for j in range(j1, j0 - 1, -1):
        row = []
        for k in range(c0, c1 + 1):
            c = grid.get((j, k))
            if c is None:
                # up and down centres alternate, so every column is some cell's slot
                row.append(".")
            elif c.o == UP:
                row.append("A" if c in weighted else "^")
            else:
                row.append("V" if c in weighted else "v")
        lines.append("".join(row).rstrip())
    return "\n".join(lines) + "\n"


def _corner_xy(p: int, q: int) -> tuple[float, float]:
    return p + q / 2, q * _H


def render_svg(r: Region, scale: float = 24.0) -> str:
    """Self-contained SVG; weighted lozenges are outlined in red with their weight as a title."""
    pts = [pt for c in r.cells for pt in c.corners()] or [(0, 0)]
    xs = [_corner_xy(*pt)[0] for pt in pts]
    ys = [_corner_xy(*pt)[1] for pt in pts]
    pad = 0.5
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    w, h = (x1 - x0) * scale, (y1 - y0) * scale

    def coords(pt) -> tuple[str, str]:
        x, y = _corner_xy(*pt)
        # SVG y grows downward
        return f"{(x - x0) * scale:.3f}", f"{(y1 - y) * scale:.3f}"

    def xy(pt) -> str:
        return ",".join(coords(pt))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.3f}" height="{h:.3f}" '
        f'viewBox="0 0 {w:.3f} {h:.3f}">',
        '<g stroke="#333" stroke-width="0.8">',
    ]
    for c in r.sorted_cells():
        fill = "#c8d7ee" if c.o == UP else "#ffffff"
        poly = " ".join(xy(pt) for pt in c.corners())
        out.append(f'<polygon points="{poly}" fill="{fill}"/>')
    out.append("</g>")
    if r.weights:
        out.append('<g stroke="#c0392b" stroke-width="2" fill="none">')
        for up, down in r.weighted_lozenges():
            shared = [pt for pt in up.corners() if pt in down.corners()]
            if len(shared) == 2:
                (ax, ay), (bx, by) = (coords(pt) for pt in shared)
                wt = r.weights[(up, down)]
                out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}">'
                           f"<title>{wt.numerator}/{wt.denominator}</title></line>")
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(r: Region, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(r)
    if fmt == "svg":
        return render_svg(r)
    raise ValueError(f"unsupported format {fmt!r}; use 'ascii' or 'svg'")
