"""Constructors for every region family, plus a boundary audit.

All halved regions share one recipe.  Cut a horizontal fern line at height
L = SE + z above the south side.  Walk the west zigzag up to the fern point
F = (0, L), then on to the north-west corner.  Go round the north, north-east,
south-east and south sides.  Finally punch out the ferns.  The sixteen
families differ only in a handful of knobs recorded in ``HALVED_SHAPES``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .ferns import as_fern
from .formulas import FAMILIES, ParameterError, Params
from .geometry import E, NE60, NW120, SE300, SW240, W, cells_inside, down_triangle, up_triangle, walk, zigzag_up
from .lattice import DOWN, UP, Down, Region, TriCell, Up

HALF = Fraction(1, 2)

WeightZone = Literal["none", "all", "above", "below"]


# -- small shapes ------------------------------------------------------------

def build_hexagon(a: int, b: int, c: int) -> Region:
    """Hexagon with sides a, b, c, a, b, c clockwise from north."""
    if min(a, b, c) < 0:
        raise ParameterError("hexagon sides must be nonnegative")
    pts = walk((0, b + c), [(E, a), (SE300, b), (SW240, c), (W, a), (NW120, b), (NE60, c)])
    return Region(cells_inside(pts))


def west_vertical_lozenges(cells, rows=None) -> dict:
    """Vertical lozenges whose whole left boundary is region boundary.

    ``rows`` optionally filters on the row of the lower (down-pointing) cell.
    """
    out = {}
    for d in cells:
        if d.o != DOWN:
            continue
        u = Up(d.i, d.j + 1)
        if u in cells and Up(d.i, d.j) not in cells and Down(d.i - 1, d.j + 1) not in cells:
            if rows is None or rows(d.j):
                out[(u, d)] = HALF
    return out


def build_proctor(kind: str, a: int, b: int, c: int) -> Region:
    """Hexagon (c, a, b, c, a, b) with a maximal staircase cut from its west corner.

    Kind ``Pp`` weights the west-side vertical lozenges by 1/2.
    """
    if kind not in ("P", "Pp"):
        raise ParameterError(f"unknown Proctor kind {kind!r}")
    if a < 0 or c < 0 or a > b:
        raise ParameterError(f"need 0 <= a <= b and c >= 0, got a={a}, b={b}, c={c}")
    moves = zigzag_up(a, a, True) + [(NE60, b - a), (E, c), (SE300, a), (SW240, b), (W, c)]
    cells = cells_inside(walk((0, 0), moves))
    return Region(cells, west_vertical_lozenges(cells) if kind == "Pp" else {})


def build_quartered(kind: str, t) -> Region:
    """Trapezoid with a zigzag west side and up-pointing triangles on its base.

    Base triangles have sides t2, t4, ... and the gaps before them t1, t3, ...
    An odd-length t is padded with a trailing 0.
    """
    if kind not in ("Q", "Qp", "K", "Kp"):
        raise ParameterError(f"unknown quartered kind {kind!r}")
    t = as_fern(t)
    e, o = t.even, t.odd
    if kind in ("K", "Kp"):
        if e == 0:
            raise ParameterError("K-type regions need a positive even-index sum")
        zz = zigzag_up(e - 1, e, False)
        height = 2 * e - 1
    else:
        zz = zigzag_up(e, e, True)
        height = 2 * e
    cells = cells_inside(walk((0, 0), zz + [(E, o), (SE300, height), (W, e + o)]))
    p = 0
    ents = t.entries + ((0,) if len(t) % 2 else ())
    for k in range(0, len(ents), 2):
        p += ents[k]
        cells -= up_triangle(p, 0, ents[k + 1])
        p += ents[k + 1]
    return Region(cells, west_vertical_lozenges(cells) if kind.endswith("p") else {})


# -- halved hexagons with two ferns ------------------------------------------

@dataclass(frozen=True)
class HalvedShape:
    """How one family departs from the plain H/R outline.

    ``reversed`` families use the R side lists and hang the a-fern's half
    triangle below the fern line.  ``d`` shortens both slanted sides.
    ``step`` inserts a unit horizontal step at the fern point, on the
    side named.  ``low_out``/``up_out`` say whether the zigzag leaves the
    fern point westward when heading down/up.  The first a-triangle has
    side 2*a1 + hole and is centred ``axis`` half-units east of F.
    """

    reversed: bool
    d: int
    dNE: int = 0
    dSE: int = 0
    step: Literal["upper", "lower"] | None = None
    low_out: bool = True
    up_out: bool = True
    hole: int = 0
    axis: int = 0
    weights: WeightZone = "none"


HALVED_SHAPES: dict[str, HalvedShape] = {
    "H1": HalvedShape(False, 0),
    "H2": HalvedShape(False, 1, low_out=False, up_out=False),
    "W1": HalvedShape(False, 0, weights="all"),
    "W2": HalvedShape(False, 1, low_out=False, up_out=False, weights="all"),
    "R1": HalvedShape(True, 0),
    "R2": HalvedShape(True, 1, low_out=False, up_out=False),
    "RW1": HalvedShape(True, 0, weights="all"),
    "RW2": HalvedShape(True, 1, low_out=False, up_out=False, weights="all"),
    # extra layer on the north side and the upper west side
    "N1": HalvedShape(False, 0, dNE=1, step="upper", up_out=False, hole=1, axis=-1, weights="above"),
    "N2": HalvedShape(False, 1, dNE=1, low_out=False, up_out=True, weights="above"),
    # W1 / W2 with that layer peeled off
    "N3": HalvedShape(False, 0, dNE=-1, up_out=False, weights="below"),
    "N4": HalvedShape(False, 1, dNE=-1, step="lower", low_out=False, up_out=True, hole=-1, axis=-1,
                      weights="below"),
    # the same on the south side and the lower west side
    "NR1": HalvedShape(True, 0, dSE=1, step="lower", low_out=False, up_out=True, hole=1, axis=-1,
                       weights="below"),
    "NR2": HalvedShape(True, 1, dSE=1, low_out=True, up_out=False, weights="below"),
    "NR3": HalvedShape(True, 0, dSE=-1, low_out=False, up_out=True, weights="above"),
    "NR4": HalvedShape(True, 1, dSE=-1, step="upper", low_out=True, up_out=False, hole=-1, axis=-1,
                       weights="above"),
}


@dataclass(frozen=True)
class Sides:
    N: int
    NE: int
    SE: int
    S: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.N, self.NE, self.SE, self.S)


def halved_sides(tag: str, p: Params) -> Sides:
    """North, north-east, south-east and south side lengths of a family member."""
    sh = _shape(tag)
    a, b, x, y, z = p.a, p.b, p.x, p.y, p.z
    ea, oa = (a.odd, a.even) if sh.reversed else (a.even, a.odd)
    return Sides(x + ea + b.even,
                 2 * y + z + 2 * oa + 2 * b.odd - sh.d + sh.dNE,
                 2 * y + z + 2 * ea + 2 * b.even - sh.d + sh.dSE,
                 x + oa + b.odd)


@dataclass(frozen=True)
class HalvedLayout:
    """Geometry behind a halved region, kept for audits and rendering."""

    outline: tuple[tuple[int, int], ...]
    fern_line: int
    lead: frozenset  # the a-fern's leading triangle, which may poke through the west side
    ferns: frozenset  # every other removed cell
    region: Region


def _shape(tag: str) -> HalvedShape:
    if tag not in HALVED_SHAPES:
        raise ParameterError(f"unknown family {tag!r}; expected one of {', '.join(FAMILIES)}")
    return HALVED_SHAPES[tag]


def halved_layout(tag: str, p: Params) -> HalvedLayout:
    sh = _shape(tag)
    sides = halved_sides(tag, p)
    if min(sides.as_tuple()) < 0:
        raise ParameterError(f"negative side length in {tag} at {p}: {sides}")
    N, NE, SE, S = sides.as_tuple()
    L = SE + p.z
    upper_rows = NE - p.z
    if upper_rows < 0:
        raise ParameterError(f"fern line above the north side in {tag} at {p}")

    # walk down from the fern point to find the south-west corner
    start_pt = (-1, L) if sh.step == "lower" else (0, L)
    down_moves = [(k % 2 == 0) == sh.low_out for k in range(L)]
    pi, qi = start_pt
    for west in down_moves:
        pi, qi = (pi, qi - 1) if west else (pi + 1, qi - 1)
    moves = [((NE60 if west else NW120), 1) for west in reversed(down_moves)]
    if sh.step == "lower":
        moves.append((E, 1))
    elif sh.step == "upper":
        moves.append((W, 1))
    moves += [((NW120 if (k % 2 == 0) == sh.up_out else NE60), 1) for k in range(upper_rows)]
    n_west = len(moves)
    moves += [(E, N), (SE300, NE), (SW240, SE), (W, S)]
    pts = walk((pi, qi), moves)
    if pts[-1] != pts[0]:
        raise ParameterError(f"outline of {tag} does not close at {p}")
    poly = cells_inside(pts)

    ferns: set[TriCell] = set()
    top = pts[n_west]
    # b-fern runs west from the north-east side
    P = top[0] + N + (top[1] - L)
    for k, s in enumerate(p.b):
        ferns |= up_triangle(P - s, L, s) if k % 2 == 0 else down_triangle(P - s, L, s)
        P -= s
    b_west_end = P
    # a-fern runs east from the west side, led by a (half) triangle on the axis
    side = 2 * p.a.entry(1) + sh.hole
    if side < 0:
        raise ParameterError(f"{tag} needs a1 >= 1, got a = ({p.a})")
    a_up = not sh.reversed
    assert (sh.axis - side) % 2 == 0
    p0 = (sh.axis - side) // 2
    lead = up_triangle(p0, L, side) if a_up else down_triangle(p0, L, side)
    P = p0 + side
    for k, s in enumerate(p.a.entries[1:]):
        up = (k % 2 == 1) == a_up
        ferns |= up_triangle(P, L, s) if up else down_triangle(P, L, s)
        P += s
    if P > b_west_end:
        raise ParameterError(f"ferns overlap on the fern line in {tag} at {p}")

    cells = poly - lead - ferns
    ws = {
        "none": {},
        "all": west_vertical_lozenges(cells),
        "above": west_vertical_lozenges(cells, lambda j: j >= L),
        "below": west_vertical_lozenges(cells, lambda j: j < L),
    }[sh.weights]
    return HalvedLayout(tuple(pts), L, frozenset(lead), frozenset(ferns), Region(cells, ws))


def build_halved(tag: str, p: Params) -> Region:
    return halved_layout(tag, p).region


# -- symmetric hexagons with three ferns -------------------------------------

def symmetric_sides(kind: str, p: Params) -> Sides:
    """(N, NE, SE, S); the west half mirrors NE and SE."""
    a, b, x, y, z = p.a, p.b, p.x, p.y, p.z
    a1 = a.entry(1)
    if kind == "S1":
        return Sides(x + 2 * a.even + 2 * b.even, y + z + 2 * a.odd - a1 + 2 * b.odd,
                     y + z + 2 * a.even + 2 * b.even, x + 2 * a.odd - a1 + 2 * b.odd)
    if kind == "S2":
        return Sides(x + 2 * a.odd - a1 + 2 * b.even, y + z + 2 * a.even + 2 * b.odd,
                     y + z + 2 * a.odd - a1 + 2 * b.even, x + 2 * a.even + 2 * b.odd)
    raise ParameterError(f"unknown symmetric kind {kind!r}")


def mirror_cells(cells, ax2: int) -> set[TriCell]:
    """Reflect across the vertical line at doubled Cartesian x = ax2."""
    out = set()
    for c in cells:
        if c.o == UP:
            out.add(Up(ax2 - c.i - c.j - 1, c.j))
        else:
            out.add(Down(ax2 - c.i - c.j - 2, c.j))
    return out


def build_symmetric(kind: str, p: Params) -> Region:
    """Mirror-symmetric hexagon with two equal side ferns and a centred middle fern.

    The middle fern has a1 on the axis (up for S1, down for S2) and a2, a3, ...
    repeated outward on both sides.
    """
    sides = symmetric_sides(kind, p)
    if (p.x - p.y) % 2:
        raise ParameterError(f"x and y must have the same parity, got x={p.x}, y={p.y}")
    N, NE, SE, S = sides.as_tuple()
    if min(N, NE, SE, S) < 0:
        raise ParameterError(f"negative side length in {kind} at {p}")
    pts = walk((0, 0), [(NW120, SE), (NE60, NE), (E, N), (SE300, NE), (SW240, SE), (W, S)])
    poly = cells_inside(pts)
    L = SE + p.z
    top = pts[SE + NE]
    ax2 = 2 * top[0] + top[1] + N
    P = top[0] + N + (top[1] - L)
    right: set[TriCell] = set()
    for k, s in enumerate(p.b):
        right |= up_triangle(P - s, L, s) if k % 2 == 0 else down_triangle(P - s, L, s)
        P -= s
    b_west_end = P
    a1 = p.a.entry(1)
    if (ax2 - L - a1) % 2:
        raise ParameterError(f"middle triangle does not sit on the axis in {kind} at {p}")
    p0 = (ax2 - L - a1) // 2
    mid_up = kind == "S1"
    middle = up_triangle(p0, L, a1) if mid_up else down_triangle(p0, L, a1)
    P = p0 + a1
    for k, s in enumerate(p.a.entries[1:]):
        up = (k % 2 == 1) == mid_up
        right |= up_triangle(P, L, s) if up else down_triangle(P, L, s)
        P += s
    if P > b_west_end:
        raise ParameterError(f"ferns overlap on the fern line in {kind} at {p}")
    holes = middle | right | mirror_cells(right, ax2)
    return Region(poly - holes)


# -- boundary audit ----------------------------------------------------------

def side_runs(outline) -> list[tuple[int, int]]:
    """Collapse a closed unit-step outline into (direction, length) runs."""
    steps = []
    for (p1, q1), (p2, q2) in zip(outline, outline[1:]):
        steps.append((p2 - p1, q2 - q1))
    runs: list[list] = []
    for st in steps:
        if runs and runs[-1][0] == st:
            runs[-1][1] += 1
        else:
            runs.append([st, 1])
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs[0][1] += runs.pop()[1]
    return [(tuple(d), n) for d, n in runs]


@dataclass(frozen=True)
class AuditReport:
    tag: str
    expected: Sides
    observed: Sides
    west_rows: int
    ferns_inside: bool
    balanced: bool

    @property
    def ok(self) -> bool:
        return (self.expected == self.observed and self.west_rows == self.expected.NE + self.expected.SE
                and self.ferns_inside and self.balanced)


def boundary_audit(tag: str, p: Params) -> AuditReport:
    """Compare the built outline's four straight sides with the family's side list."""
    lay = halved_layout(tag, p)
    pts = lay.outline
    expected = halved_sides(tag, p)
    N, NE, SE, S = expected.as_tuple()
    # the last four legs of the walk are the straight sides, in order
    legs = []
    idx = len(pts) - 1
    for n in (S, SE, NE, N):
        legs.append((pts[idx - n], pts[idx]))
        idx -= n
    west_rows = pts[idx][1] - pts[0][1]

    def length(seg, step):
        (p1, q1), (p2, q2) = seg
        dp, dq = step
        n = max(abs(p2 - p1), abs(q2 - q1))
        if n and (p1 + n * dp, q1 + n * dq) != (p2, q2):
            return -1
        return n

    s_leg, se_leg, ne_leg, n_leg = legs
    observed = Sides(length(n_leg, (1, 0)), length(ne_leg, (1, -1)), length(se_leg, (0, -1)),
                     length(s_leg, (-1, 0)))
    ups = sum(1 for c in lay.region.cells if c.o == UP)
    return AuditReport(tag, expected, observed, west_rows,
                       lay.ferns <= cells_inside(pts), 2 * ups == len(lay.region.cells))
