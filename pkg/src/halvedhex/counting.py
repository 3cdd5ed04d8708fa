"""Exact weighted lozenge-tiling counts (perfect matchings of the dual graph).

Three independent oracles:

* ``count_tilings`` -- frontier dynamic programming in scan order,
* ``count_tilings_determinant`` -- a Kasteleyn-signed bipartite determinant,
* ``enumerate_tilings`` -- plain backtracking for tiny regions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import DOWN, UP, Region, neighbors

FRONTIER_CAP = 64


class CapacityError(RuntimeError):
    """Region too wide for the frontier DP."""


def _integer_weights(r: Region):
    """Scale all weights by a common denominator so the DP runs on ints."""
    den = 1
    for w in r.weights.values():
        den = den * w.denominator // math.gcd(den, w.denominator)
    return den


def count_tilings(r: Region, cap: int = FRONTIER_CAP) -> Fraction:
    cells = r.sorted_cells()
    n = len(cells)
    if n == 0:
        return Fraction(1)
    if 2 * sum(1 for c in cells if c.o == UP) != n:
        return Fraction(0)
    den = _integer_weights(r)
    index = {c: k for k, c in enumerate(cells)}
    forward: list[list[tuple[int, int]]] = []
    for k, c in enumerate(cells):
        opts = []
        for nb in neighbors(c):
            m = index.get(nb)
            if m is not None and m > k:
                w = r.weight(c, nb) * den
                if m - k > cap:
                    raise CapacityError(f"frontier width {m - k} exceeds cap {cap}")
                opts.append((m - k, int(w)))
        forward.append(opts)

    # Vertical lozenges crossing from row j to row j+1 are forced in number:
    # v_j = v_{j-1} + #Down(row j) - #Up(row j).  States are pruned against it.
    rows = sorted({c.j for c in cells})
    row_of = [c.j for c in cells]
    next_row_start = {}
    need = {}
    v = 0
    for j in rows:
        ups = sum(1 for c in cells if c.j == j and c.o == UP)
        downs = sum(1 for c in cells if c.j == j and c.o == DOWN)
        v = v + downs - ups
        if v < 0:
            return Fraction(0)
        need[j] = v
    starts = {}
    for k, c in enumerate(cells):
        starts.setdefault(c.j, k)
    for j in rows:
        next_row_start[j] = starts.get(j + 1, n)
    downs_after = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        same = k + 1 < n and row_of[k + 1] == row_of[k]
        downs_after[k] = (downs_after[k + 1] if same else 0) + (cells[k].o == DOWN)

    # bit t of a state marks cell k+t as already covered
    states = {0: 1}
    for k in range(n):
        nxt: dict[int, int] = {}
        opts = forward[k]
        for st, val in states.items():
            if st & 1:
                s2 = st >> 1
                nxt[s2] = nxt.get(s2, 0) + val
                continue
            for off, w in opts:
                bit = 1 << off
                if st & bit:
                    continue
                s2 = (st | bit) >> 1
                nxt[s2] = nxt.get(s2, 0) + val * w
        j = row_of[k]
        shift = next_row_start[j] - k - 1
        target = need[j]
        later = downs_after[k + 1] if k + 1 < n and row_of[k + 1] == j else 0
        states = {}
        for st, val in nxt.items():
            up_next = (st >> shift).bit_count() if shift >= 0 else 0
            if up_next <= target <= up_next + later:
                states[st] = val
        if not states:
            return Fraction(0)
    total = states.get(0, 0)
    return Fraction(total, den ** (n // 2))


# -- Kasteleyn determinant -----------------------------------------------------

_SQ3 = 3 ** 0.5


def _centroid(c):
    # exact comparisons only need consistent angles; floats are used just for sorting
    fx, fy = (1 / 3, 1 / 3) if c.o == UP else (2 / 3, 2 / 3)
    p, q = c.i + fx, c.j + fy
    return (p + q / 2, q * _SQ3 / 2)


def _direction_rank(a, b) -> int:
    """Angular position (0..5) of neighbour b around a; the six offsets are fixed."""
    di, dj = b.i - a.i, b.j - a.j
    if a.o == UP:
        # Down(i,j) east, Down(i-1,j) north-west, Down(i,j-1) south
        table = {(0, 0): 0, (-1, 0): 2, (0, -1): 4}
    else:
        # Up(i+1,j) south-east... ordering by true angle around the centroid
        table = {(1, 0): 5, (0, 1): 1, (0, 0): 3}
    return table[(di, dj)]


def kasteleyn_signs(r: Region) -> dict:
    """Return a sign (+1/-1) for every dual edge making the determinant a permanent.

    Faces are traced from the planar rotation system; each bounded face walk of
    length 2k must carry a number of minus signs congruent to k-1 mod 2.  The
    linear system over GF(2) is solved by elimination on bitsets.
    """
    cells = r.sorted_cells()
    cellset = r.cells
    edges = []
    eid = {}
    for c in cells:
        if c.o == UP:
            for d in neighbors(c):
                if d in cellset:
                    eid[(c, d)] = len(edges)
                    edges.append((c, d))
    rot = {}
    for c in cells:
        nbs = [d for d in neighbors(c) if d in cellset]
        nbs.sort(key=lambda d: _direction_rank(c, d))
        rot[c] = nbs

    def key(a, b):
        return eid[(a, b)] if a.o == UP else eid[(b, a)]

    seen = set()
    faces = []
    for a in cells:
        for b in rot[a]:
            if (a, b) in seen:
                continue
            walk = []
            u, v = a, b
            area = 0.0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(key(u, v))
                x1, y1 = _centroid(u)
                x2, y2 = _centroid(v)
                area += x1 * y2 - x2 * y1
                nb = rot[v]
                idx = nb.index(u)
                w = nb[(idx - 1) % len(nb)]  # next edge clockwise from the incoming one
                u, v = v, w
            faces.append((area, walk))

    # one outer face per connected component: the face of minimal signed area
    comp = _components(cells, rot)
    outer = {}
    for fi, (area, walk) in enumerate(faces):
        root = comp[edges[walk[0]][0]]
        if root not in outer or area < faces[outer[root]][0]:
            outer[root] = fi
    outer_ids = set(outer.values())

    rows = []
    for fi, (area, walk) in enumerate(faces):
        if fi in outer_ids:
            continue
        vec = 0
        for e in walk:
            vec ^= 1 << e
        rhs = (len(walk) // 2 - 1) & 1
        rows.append((vec, rhs))
    sol = _solve_gf2(rows, len(edges))
    return {edges[k]: (-1 if (sol >> k) & 1 else 1) for k in range(len(edges))}


def _components(cells, rot):
    comp = {}
    for c in cells:
        if c in comp:
            continue
        comp[c] = c
        stack = [c]
        while stack:
            u = stack.pop()
            for v in rot[u]:
                if v not in comp:
                    comp[v] = c
                    stack.append(v)
    return comp


def _solve_gf2(rows, nvars: int) -> int:
    pivots: dict[int, tuple[int, int]] = {}
    for vec, rhs in rows:
        while vec:
            p = vec.bit_length() - 1
            if p in pivots:
                pv, pr = pivots[p]
                vec ^= pv
                rhs ^= pr
            else:
                pivots[p] = (vec, rhs)
                break
        else:
            if rhs:
                raise ArithmeticError("inconsistent Kasteleyn system")
    sol = 0
    for p in sorted(pivots):
        vec, rhs = pivots[p]
        rest = vec & ~(1 << p)
        val = rhs ^ (bin(rest & sol).count("1") & 1)
        if val:
            sol |= 1 << p
    return sol


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            mik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pk - mik * rowk[j]) // prev
            rowi[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def count_tilings_determinant(r: Region) -> Fraction:
    ups, downs = r.ups(), r.downs()
    if len(ups) != len(downs):
        return Fraction(0)
    if not ups:
        return Fraction(1)
    den = _integer_weights(r)
    signs = kasteleyn_signs(r)
    col = {d: k for k, d in enumerate(downs)}
    mat = [[0] * len(downs) for _ in ups]
    for a, u in enumerate(ups):
        for d in neighbors(u):
            if d in col:
                w = r.weight(u, d) * den
                mat[a][col[d]] = signs[(u, d)] * int(w)
    det = _bareiss_det(mat)
    return Fraction(abs(det), den ** len(ups))


# -- explicit enumeration ------------------------------------------------------

@dataclass
class Enumeration:
    tilings: list  # each a frozenset of (up, down) lozenges
    complete: bool

    def weighted_sum(self, r: Region) -> Fraction:
        total = Fraction(0)
        for t in self.tilings:
            p = Fraction(1)
            for u, d in t:
                p *= r.weight(u, d)
            total += p
        return total


def enumerate_tilings(r: Region, limit: int) -> Enumeration:
    """Backtracking enumeration; stops with ``complete=False`` past ``limit`` tilings."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    order = r.sorted_cells()
    cellset = r.cells
    out: list = []
    covered: set = set()
    chosen: list = []

    def first_free(start):
        for k in range(start, len(order)):
            if order[k] not in covered:
                return k
        return None

    def rec(start) -> bool:
        k = first_free(start)
        if k is None:
            if len(out) >= limit:
                return False
            out.append(frozenset(chosen))
            return True
        c = order[k]
        for nb in neighbors(c):
            if nb in cellset and nb not in covered:
                covered.update((c, nb))
                chosen.append((c, nb) if c.o == UP else (nb, c))
                ok = rec(k + 1)
                chosen.pop()
                covered.difference_update((c, nb))
                if not ok:
                    return False
        return True

    if 2 * len(r.ups()) != len(order):
        return Enumeration([], True)
    complete = rec(0)
    return Enumeration(out, complete)
