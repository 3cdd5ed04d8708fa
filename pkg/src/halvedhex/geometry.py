"""Turtle-built lattice polygons and exact cell membership.

A boundary is a closed walk along lattice lines.  A cell belongs to the polygon
iff its centroid is inside; centroids never lie on lattice lines, so the
crossing test needs no tie-breaking.  Everything is done in lattice
coordinates scaled by 3, which is an affine image of the plane and therefore
preserves insideness.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .lattice import DOWN, UP, TriCell

# lattice-coordinate unit steps by compass angle (degrees, counterclockwise from east)
DIRS = {
    0: (1, 0),
    60: (0, 1),
    120: (-1, 1),
    180: (-1, 0),
    240: (0, -1),
    300: (1, -1),
}
E, NE60, NW120, W, SW240, SE300 = 0, 60, 120, 180, 240, 300


def walk(start: tuple[int, int], moves: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices visited by a turtle; ``moves`` holds (angle, length) pairs."""
    p, q = start
    pts = [(p, q)]
    for ang, n in moves:
        if n < 0:
            raise ValueError(f"negative side length {n} at angle {ang}")
        dp, dq = DIRS[ang]
        for _ in range(n):
            p, q = p + dp, q + dq
            pts.append((p, q))
    return pts


def zigzag_up(steps_out: int, steps_in: int, start_out: bool) -> list[tuple[int, int]]:
    """Unit moves of a vertical zigzag going north.

    An "out" move heads 120 degrees (up-left), an "in" move 60 degrees
    (up-right).  Moves alternate, beginning with ``start_out``.
    """
    if steps_out < 0 or steps_in < 0:
        raise ValueError(f"negative zigzag move count ({steps_out}, {steps_in})")
    moves = []
    out_left, in_left = steps_out, steps_in
    cur_out = start_out
    while out_left or in_left:
        if cur_out and out_left:
            moves.append((NW120, 1))
            out_left -= 1
        elif not cur_out and in_left:
            moves.append((NE60, 1))
            in_left -= 1
        else:
            raise ValueError("zigzag move counts cannot alternate")
        cur_out = not cur_out
    return moves


def zigzag_down(steps_out: int, steps_in: int, start_out: bool) -> list[tuple[int, int]]:
    """As ``zigzag_up`` but heading south: out = 240 degrees, in = 300 degrees."""
    return [(SW240 if a == NW120 else SE300, 1) for a, _ in zigzag_up(steps_out, steps_in, start_out)]


def _inside(pt3: tuple[int, int], poly3: Sequence[tuple[int, int]]) -> bool:
    x, y = pt3
    inside = False
    n = len(poly3)
    for k in range(n):
        x1, y1 = poly3[k]
        x2, y2 = poly3[(k + 1) % n]
        if (y1 > y) != (y2 > y):
            # x-coordinate of the crossing compared without division
            lhs = (x - x1) * (y2 - y1)
            rhs = (x2 - x1) * (y - y1)
            if (y2 > y1 and lhs < rhs) or (y2 < y1 and lhs > rhs):
                inside = not inside
    return inside


def cells_inside(poly: Sequence[tuple[int, int]]) -> set[TriCell]:
    if len(poly) < 3:
        return set()
    if poly[0] == poly[-1]:
        poly = poly[:-1]
    poly3 = [(3 * p, 3 * q) for p, q in poly]
    pmin = min(p for p, _ in poly) - 1
    pmax = max(p for p, _ in poly) + 1
    qmin = min(q for _, q in poly)
    qmax = max(q for _, q in poly)
    out = set()
    for j in range(qmin, qmax):
        for i in range(pmin - (qmax - qmin), pmax + 1):
            if _inside((3 * i + 1, 3 * j + 1), poly3):
                out.add(TriCell(i, j, UP))
            if _inside((3 * i + 2, 3 * j + 2), poly3):
                out.add(TriCell(i, j, DOWN))
    return out


def up_triangle(p: int, q: int, s: int) -> set[TriCell]:
    """Cells of the up-pointing triangle of side s with lower-left corner (p, q)."""
    return {TriCell(p + u, q + v, UP) for v in range(s) for u in range(s - v)} | {
        TriCell(p + u, q + v, DOWN) for v in range(s) for u in range(s - v - 1)
    }


def down_triangle(p: int, q: int, s: int) -> set[TriCell]:
    """Cells of the down-pointing triangle of side s with upper-left corner (p, q)."""
    # corners (p,q), (p+s,q), (p+s,q-s); row q-1-v has s-v down cells
    cells = set()
    for v in range(s):
        row = q - 1 - v
        # down cells spanning the row between the two slanted sides
        for u in range(s - v):
            cells.add(TriCell(p + v + u, row, DOWN))
        for u in range(s - v - 1):
            cells.add(TriCell(p + v + u + 1, row, UP))
    return cells
