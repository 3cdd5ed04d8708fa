"""Triangular-lattice cells, weighted regions and their dual graphs.

Coordinates: ``Up(i, j)`` has corners (i,j), (i+1,j), (i,j+1); ``Down(i, j)`` has
corners (i+1,j), (i,j+1), (i+1,j+1).  Lattice point (p, q) sits at Cartesian
(p + q/2, q*sqrt(3)/2), so rows of constant j are horizontal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

UP = "U"
DOWN = "D"


class TriCell(NamedTuple):
    i: int
    j: int
    o: str  # "U" or "D"

    @property
    def is_up(self) -> bool:
        return self.o == UP

    def corners(self) -> tuple[tuple[int, int], ...]:
        i, j = self.i, self.j
        if self.o == UP:
            return ((i, j), (i + 1, j), (i, j + 1))
        return ((i + 1, j), (i, j + 1), (i + 1, j + 1))

    def __repr__(self) -> str:
        return f"{'Up' if self.o == UP else 'Down'}({self.i},{self.j})"


def Up(i: int, j: int) -> TriCell:
    return TriCell(i, j, UP)


def Down(i: int, j: int) -> TriCell:
    return TriCell(i, j, DOWN)


def scan_key(c: TriCell) -> tuple[int, int, int]:
    """Row-major scan order: by j, then i, Up before Down."""
    return (c.j, c.i, 0 if c.o == UP else 1)


def neighbors(c: TriCell) -> list[TriCell]:
    i, j = c.i, c.j
    if c.o == UP:
        return [Down(i, j), Down(i - 1, j), Down(i, j - 1)]
    return [Up(i, j), Up(i + 1, j), Up(i, j + 1)]


def lozenge(c1: TriCell, c2: TriCell) -> tuple[TriCell, TriCell]:
    """Canonical (up, down) key for the lozenge formed by two adjacent cells."""
    up, down = (c1, c2) if c1.o == UP else (c2, c1)
    if up.o != UP or down.o != DOWN or down not in neighbors(up):
        raise ValueError(f"{c1!r} and {c2!r} do not form a lozenge")
    return (up, down)


def is_vertical(loz: tuple[TriCell, TriCell]) -> bool:
    """Vertical lozenges are {Down(i,j), Up(i,j+1)}: the shared edge is horizontal."""
    up, down = loz
    return up.i == down.i and up.j == down.j + 1


def parse_weight(w) -> Fraction:
    return w if isinstance(w, Fraction) else Fraction(str(w))


def format_fraction(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, eq=False)
class Region:
    """A finite cell set with optional lozenge weights (absent means weight 1)."""

    cells: frozenset = frozenset()
    weights: Mapping = field(default_factory=dict)

    def __post_init__(self):
        cells = frozenset(TriCell(*c) for c in self.cells)
        ws: dict = {}
        for key, w in dict(self.weights).items():
            up, down = lozenge(*key)
            if up not in cells or down not in cells:
                raise ValueError(f"weighted lozenge {(up, down)} not inside region")
            w = parse_weight(w)
            if w <= 0:
                raise ValueError(f"weights must be positive, got {w}")
            if w != 1:
                ws[(up, down)] = w
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "weights", ws)

    def __eq__(self, other) -> bool:
        return isinstance(other, Region) and self.cells == other.cells and self.weights == other.weights

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, c) -> bool:
        return c in self.cells

    def weight(self, c1: TriCell, c2: TriCell) -> Fraction:
        return self.weights.get(lozenge(c1, c2), Fraction(1))

    def sorted_cells(self) -> list[TriCell]:
        return sorted(self.cells, key=scan_key)

    def ups(self) -> list[TriCell]:
        return [c for c in self.sorted_cells() if c.o == UP]

    def downs(self) -> list[TriCell]:
        return [c for c in self.sorted_cells() if c.o == DOWN]

    def without(self, removed: Iterable[TriCell]) -> "Region":
        """Drop cells together with any weights touching them."""
        gone = set(removed)
        cells = self.cells - gone
        ws = {k: w for k, w in self.weights.items() if k[0] in cells and k[1] in cells}
        return Region(cells, ws)

    def with_weights(self, extra: Mapping) -> "Region":
        ws = dict(self.weights)
        ws.update({lozenge(*k): parse_weight(w) for k, w in extra.items()})
        return Region(self.cells, ws)

    def translated(self, di: int, dj: int) -> "Region":
        move = lambda c: TriCell(c.i + di, c.j + dj, c.o)  # noqa: E731
        return Region({move(c) for c in self.cells},
                      {(move(u), move(d)): w for (u, d), w in self.weights.items()})

    def mirrored(self, c: int = 0) -> "Region":
        """Reflect across a vertical line; lattice point (p, q) goes to (c - p - q, q)."""

        def flip(t: TriCell) -> TriCell:
            if t.o == UP:
                return Up(c - t.i - t.j - 1, t.j)
            return Down(c - t.i - t.j - 2, t.j)

        return Region({flip(t) for t in self.cells},
                      {lozenge(flip(u), flip(d)): w for (u, d), w in self.weights.items()})

    def normalized(self) -> "Region":
        """Translate so the minimal (j, p) lattice corner sits at the origin."""
        if not self.cells:
            return self
        jmin = min(c.j for c in self.cells)
        imin = min(c.i for c in self.cells if c.j == jmin)
        return self.translated(-imin, -jmin)

    def weighted_lozenges(self) -> list[tuple[TriCell, TriCell]]:
        return sorted(self.weights, key=lambda k: (scan_key(k[0]), scan_key(k[1])))


EMPTY = Region()


def is_balanced(r: Region) -> bool:
    ups = sum(1 for c in r.cells if c.o == UP)
    return 2 * ups == len(r.cells)


@dataclass
class DualGraph:
    vertices: list
    edges: list  # (up, down, weight)

    def adjacency(self) -> dict:
        adj: dict = {v: [] for v in self.vertices}
        for u, d, w in self.edges:
            adj[u].append((d, w))
            adj[d].append((u, w))
        return adj


def dual_graph(r: Region) -> DualGraph:
    verts = r.sorted_cells()
    edges = []
    for c in verts:
        if c.o != UP:
            continue
        for d in neighbors(c):
            if d in r.cells:
                edges.append((c, d, r.weights.get((c, d), Fraction(1))))
    edges.sort(key=lambda e: (scan_key(e[0]), scan_key(e[1])))
    return DualGraph(verts, edges)


@dataclass(frozen=True)
class Reduction:
    reduced: Region
    multiplier: Fraction
    untileable: bool = False


def remove_forced(r: Region, order_seed: int | None = None) -> Reduction:
    """Strip degree-one cells with their partners, collecting lozenge weights.

    An isolated cell makes the region untileable; that is reported as an
    empty reduced region with multiplier 0.  ``order_seed`` shuffles the
    elimination order, which must not change the outcome.
    """
    live = set(r.cells)
    mult = Fraction(1)

    def deg(c):
        return [n for n in neighbors(c) if n in live]

    queue = sorted(live, key=scan_key)
    if order_seed is not None:
        import random

        random.Random(order_seed).shuffle(queue)
    pending = list(queue)
    while pending:
        c = pending.pop()
        if c not in live:
            continue
        nb = deg(c)
        if len(nb) == 0:
            # canonical marker, so the outcome stays independent of the order
            return Reduction(Region(), Fraction(0), True)
        if len(nb) != 1:
            continue
        p = nb[0]
        mult *= r.weight(c, p)
        live.discard(c)
        live.discard(p)
        for q in neighbors(p):
            if q in live:
                pending.append(q)
    return Reduction(r.without(set(r.cells) - live), mult)


# -- serialization -----------------------------------------------------------

def _cell_json(c: TriCell) -> dict:
    return {"i": c.i, "j": c.j, "o": c.o}


def _cell_from(d: Mapping) -> TriCell:
    if d["o"] not in (UP, DOWN):
        raise ValueError(f"bad orientation {d['o']!r}")
    return TriCell(int(d["i"]), int(d["j"]), d["o"])


def region_to_dict(r: Region) -> dict:
    return {
        "cells": [_cell_json(c) for c in r.sorted_cells()],
        "weights": [{"a": _cell_json(u), "b": _cell_json(d), "w": format_fraction(w)}
                    for u, d in r.weighted_lozenges() for w in [r.weights[(u, d)]]],
    }


def region_from_dict(d: Mapping) -> Region:
    cells = {_cell_from(c) for c in d.get("cells", [])}
    ws = {(_cell_from(e["a"]), _cell_from(e["b"])): Fraction(e["w"]) for e in d.get("weights", [])}
    return Region(cells, ws)


def region_to_json(r: Region) -> str:
    return json.dumps(region_to_dict(r), indent=1, sort_keys=True) + "\n"


def region_from_json(text: str) -> Region:
    return region_from_dict(json.loads(text))
