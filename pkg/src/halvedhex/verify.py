"""Verification harness: formula-vs-oracle sweeps and the identities behind the proofs.

Every comparison is exact.  A record whose computation could not be carried
out (infeasible parameters, a pole, a frontier over capacity) is kept with a
machine-readable ``skipped`` reason instead of aborting the run.
"""
from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from .counting import CapacityError, count_tilings
from .families import build_halved, build_symmetric, halved_layout, halved_sides
from .ferns import Fern, as_fern, partial_sum, plus_one
from .formulas import (FAMILIES, SYMMETRIC_KINDS, ParameterError, Params, halved_count,
                       quartered_count, symmetric_factorization)
from .lattice import UP, Down, Region, TriCell, Up, format_fraction
from .products import (DomainError, PoleError, pochhammer, pochhammer_skip, product_T,
                       product_V)

CSV_COLUMNS = ("check", "family", "x", "y", "z", "a", "b", "formula", "oracle", "match",
               "cells", "ms", "note")


@dataclass(frozen=True)
class VerificationRecord:
    check: str
    family: str
    params: dict
    formula: Fraction | None
    oracle: Fraction | None
    match: bool
    cells: int = 0
    ms: float = 0.0
    skipped: str | None = None

    def row(self) -> dict:
        fmt = lambda q: "" if q is None else format_fraction(q)  # noqa: E731
        std = ("x", "y", "z", "a", "b")
        extra = " ".join(f"{k}={v}" for k, v in self.params.items() if k not in std)
        note = "; ".join(s for s in (extra, f"skipped: {self.skipped}" if self.skipped else "") if s)
        return {
            "check": self.check, "family": self.family,
            **{k: str(self.params.get(k, "")) for k in std},
            "formula": fmt(self.formula), "oracle": fmt(self.oracle),
            "match": "skip" if self.skipped else str(self.match).lower(),
            "cells": self.cells, "ms": f"{self.ms:.1f}", "note": note,
        }


def _params_dict(p: Params) -> dict:
    return {"x": p.x, "y": p.y, "z": p.z, "a": str(p.a), "b": str(p.b)}


@dataclass(frozen=True)
class ParameterGrid:
    xs: Sequence[int] = (0, 1, 2)
    ys: Sequence[int] = (0, 1, 2)
    zs: Sequence[int] = (0, 1, 2)
    ferns_a: Sequence = ((), (1,), (2,), (1, 1), (2, 1))
    ferns_b: Sequence = ((), (1,), (2,), (1, 1), (2, 1))

    def points(self) -> list[Params]:
        return [Params(x, y, z, as_fern(a), as_fern(b))
                for x, y, z, a, b in product(self.xs, self.ys, self.zs, self.ferns_a, self.ferns_b)]

    @classmethod
    def up_to(cls, max_x: int, max_y: int, max_z: int, ferns: Sequence) -> "ParameterGrid":
        fs = tuple(tuple(f) for f in ferns)
        return cls(tuple(range(max_x + 1)), tuple(range(max_y + 1)), tuple(range(max_z + 1)), fs, fs)


def _timed(fn: Callable):
    t0 = time.perf_counter()
    out = fn()
    return out, (time.perf_counter() - t0) * 1000


def _sweep_point(job: tuple[str, Params]) -> VerificationRecord:
    tag, p = job
    pd = _params_dict(p)
    t0 = time.perf_counter()
    try:
        region = build_halved(tag, p)
    except ParameterError as e:
        return VerificationRecord("sweep", tag, pd, None, None, False, skipped=f"infeasible: {e}")
    try:
        formula = halved_count(tag, p)
    except (PoleError, ParameterError, DomainError) as e:
        return VerificationRecord("sweep", tag, pd, None, None, False, len(region),
                                  skipped=f"pole: {e}")
    try:
        oracle = count_tilings(region)
    except CapacityError as e:
        return VerificationRecord("sweep", tag, pd, formula, None, False, len(region),
                                  skipped=f"capacity: {e}")
    ms = (time.perf_counter() - t0) * 1000
    return VerificationRecord("sweep", tag, pd, formula, oracle, formula == oracle, len(region), ms)


def _run(fn, jobs: list, n_jobs: int) -> list:
    if n_jobs <= 1 or len(jobs) < 2:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        # map keeps input order, so records merge deterministically
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * n_jobs))))


def sweep(tags: Iterable[str], grid: ParameterGrid, jobs: int = 1) -> list[VerificationRecord]:
    """halved_count against count_tilings for every (tag, grid point)."""
    wanted = set(tags)
    unknown = wanted - set(FAMILIES)
    if unknown:
        raise ParameterError(f"unknown families: {', '.join(sorted(unknown))}")
    ordered = [t for t in FAMILIES if t in wanted]
    return _run(_sweep_point, [(t, p) for t in ordered for p in grid.points()], jobs)


# -- Kuo condensation --------------------------------------------------------

@dataclass(frozen=True)
class KuoCounts:
    full: Fraction
    all_four: Fraction
    uv: Fraction
    ws: Fraction
    us: Fraction
    vw: Fraction

    @property
    def holds(self) -> bool:
        return self.full * self.all_four == self.uv * self.ws + self.us * self.vw


def _cells_at(pt: tuple[int, int]) -> list[TriCell]:
    p, q = pt
    return [Up(p, q), Up(p - 1, q), Up(p, q - 1), Down(p - 1, q - 1), Down(p, q - 1), Down(p - 1, q)]


def _on_boundary(r: Region, c: TriCell) -> bool:
    # touching the complement at a corner puts the dual vertex on a non-inner face
    return any(n not in r.cells for pt in c.corners() for n in _cells_at(pt))


def kuo_counts(r: Region, u: TriCell, v: TriCell, w: TriCell, s: TriCell) -> KuoCounts:
    cells = (u, v, w, s)
    if len(set(cells)) != 4:
        raise ParameterError("u, v, w, s must be distinct")
    for c in cells:
        if c not in r.cells:
            raise ParameterError(f"cell {c} is not in the region")
        if not _on_boundary(r, c):
            raise ParameterError(f"cell {c} is not on the boundary")
    if not (u.o == w.o and v.o == s.o and u.o != v.o):
        raise ParameterError("u, w and v, s must lie in opposite colour classes")
    m = lambda gone: count_tilings(r.without(gone))  # noqa: E731
    return KuoCounts(count_tilings(r), m(cells), m((u, v)), m((w, s)), m((u, s)), m((v, w)))


def kuo_check(r: Region, u: TriCell, v: TriCell, w: TriCell, s: TriCell) -> bool:
    """M(G)M(G-uvws) = M(G-uv)M(G-ws) + M(G-us)M(G-vw), all six by the oracle.

    Only the colour classes and boundary membership are validated; the cyclic
    order of the four cells is the caller's responsibility.
    """
    return kuo_counts(r, u, v, w, s).holds


def kuo_placement(tag: str, p: Params) -> tuple[TriCell, TriCell, TriCell, TriCell]:
    """u, v, w, s read off a built halved region.

    u: rightmost up cell of the top row.  v: the down cell on the fern line
    just west of the b-fern.  w, s: the bowtie in the lower-right corner,
    an up cell in row 1 over a down cell in row 0.
    """
    lay = halved_layout(tag, p)
    cells = lay.region.cells
    if not cells:
        raise ParameterError(f"empty region for {tag} at {p}")
    top_row = max(c.j for c in cells)
    u = max((c for c in cells if c.j == top_row and c.o == UP), key=lambda c: c.i)
    N, NE, SE, S = halved_sides(tag, p).as_tuple()
    top = lay.outline[len(lay.outline) - 1 - S - SE - NE - N]
    L = lay.fern_line
    b_west = top[0] + N + (top[1] - L) - p.b.total
    v = Down(b_west - 1, L - 1)
    corner = max((c for c in cells if c.j == 0), key=lambda c: c.i)
    w, s = Up(corner.i, 1), Down(corner.i - 1, 0)
    return u, v, w, s


def _recurrence_points(p: Params) -> dict[str, Params]:
    bb = plus_one(p.b)
    return {
        "full": p,
        "all_four": p.replace(y=p.y - 1, z=p.z - 1, b=bb),
        "uv": p.replace(y=p.y - 1, b=bb),
        "ws": p.replace(z=p.z - 1),
        "us": p.replace(x=p.x + 1, y=p.y - 1),
        "vw": p.replace(x=p.x - 1, z=p.z - 1, b=bb),
    }


def _recurrence_pre(p: Params) -> None:
    if min(p.x, p.y, p.z) < 1:
        raise ParameterError(f"recurrence needs x, y, z >= 1, got {p}")
    if not p.b.entries or p.b.entries[-1] <= 0:
        raise ParameterError(f"recurrence needs a nonempty b with positive last entry, got {p}")


def recurrence_counts(tag: str, p: Params) -> KuoCounts:
    if tag not in FAMILIES:
        raise ParameterError(f"unknown family {tag!r}")
    _recurrence_pre(p)
    pts = _recurrence_points(p)
    return KuoCounts(**{k: count_tilings(build_halved(tag, q)) for k, q in pts.items()})


def recurrence_check(tag: str, p: Params) -> bool:
    """The six-region recurrence, each region counted by the oracle."""
    return recurrence_counts(tag, p).holds


def kuo_region_check(tag: str, p: Params) -> bool:
    """Kuo on the built region, plus: each cell-deleted region counts like its named family member."""
    _recurrence_pre(p)
    r = build_halved(tag, p)
    u, v, w, s = kuo_placement(tag, p)
    got = kuo_counts(r, u, v, w, s)
    named = recurrence_counts(tag, p)
    return got.holds and got == named


# -- base splits -------------------------------------------------------------

def _merge_flags(tag: str, cut: str, m_odd: bool, n_odd: bool) -> tuple[bool, bool]:
    """Whether the gap entry absorbs (a_m, b_n) in the upper piece; the lower one takes the rest."""
    left, right = m_odd, n_odd
    if cut == "y":
        left, right = not left, not right
    if tag == "R1":
        left = not left
    return left, right


def _spliced(a: list[int], gap: int, b_rev: list[int], lead_zero: bool, left: bool, right: bool,
             tail: int | None) -> Fern:
    a, b_rev = list(a), list(b_rev)
    mid = gap
    if left:
        mid += a.pop()
    if right:
        mid += b_rev.pop(0)
    seq = ([0] if lead_zero else []) + a + [mid] + b_rev + ([] if tail is None else [tail])
    return Fern(tuple(seq))


def base_split_sequences(tag: str, p: Params) -> tuple[Fern, Fern]:
    """The Q-type ferns of the pieces above and below the fern line when x = 0 or y = 0.

    An empty fern is read as (0).  H1 puts the leading 0 on the upper piece,
    R1 on the lower one.
    """
    if tag not in ("H1", "R1"):
        raise ParameterError(f"base splits are defined for H1 and R1, not {tag!r}")
    if p.x != 0 and p.y != 0:
        raise ParameterError(f"base split needs x = 0 or y = 0, got {p}")
    cut = "x" if p.x == 0 else "y"
    a = list(p.a.entries) or [0]
    b = list(p.b.entries) or [0]
    gap = p.y if cut == "x" else p.x
    left, right = _merge_flags(tag, cut, len(a) % 2 == 1, len(b) % 2 == 1)
    upper = _spliced(a, gap, b[::-1], tag == "H1", left, right, None)
    lower = _spliced(a, gap, b[::-1], tag == "R1", not left, not right, p.z)
    return upper, lower


def base_split_values(tag: str, p: Params) -> tuple[Fraction, Fraction]:
    upper, lower = base_split_sequences(tag, p)
    oracle = count_tilings(build_halved(tag, p))
    return quartered_count("Q", upper) * quartered_count("Q", lower), oracle


def base_split_check(tag: str, p: Params) -> bool:
    product_value, oracle = base_split_values(tag, p)
    return product_value == oracle


# -- factorization of the symmetric regions -------------------------------------

def factorization_values(kind: str, p: Params) -> tuple[Fraction, Fraction]:
    """(prefactor * oracle(half) * oracle(half), oracle(whole))."""
    if kind not in SYMMETRIC_KINDS:
        raise ParameterError(f"unknown symmetric kind {kind!r}")
    if not p.a.entries:
        raise ParameterError("factorization needs a nonempty a")
    f = symmetric_factorization(kind, p)
    region = build_symmetric(kind, p)
    whole = count_tilings(region)
    try:
        halves = count_tilings(build_halved(*f.floor_factor)) * count_tilings(build_halved(*f.ceil_factor))
    except ParameterError:
        # an empty whole region cuts into empty halves, even where the half's side list goes negative
        if region.cells:
            raise
        halves = Fraction(1)
    return f.prefactor * halves, whole


def factorization_check(kind: str, p: Params) -> bool:
    lhs, whole = factorization_values(kind, p)
    return lhs == whole


# -- algebraic identities ------------------------------------------------------

def _tv_sides(x: Fraction, n: int, m: int) -> dict[str, tuple[Fraction, Fraction]]:
    return {
        "TV1": (product_T(x, n, m) / product_T(x - 1, n, m),
                pochhammer(x + n - m, m) / pochhammer(x - 1, m)),
        "TV2": (product_T(x, n, m), pochhammer(x, n) * product_T(x + 1, n - 2, m - 1)),
        "TV3": (product_V(x, n, m) / product_V(x - 2, n, m),
                pochhammer_skip(x + 2 * n - 2 * m, m) / pochhammer_skip(x - 2, m)),
        "TV4": (product_V(x, n, m), pochhammer_skip(x, n) * product_V(x + 2, n - 2, m - 1)),
    }


def _fact(n: int) -> int:
    if n < 0:
        raise PoleError(f"factorial of {n}")
    from math import factorial
    return factorial(n)


def qk_ratio_q(t: Fern) -> Fraction:
    """Closed form of Q(t with last entry + 1) / Q(t) for even-length t."""
    l = len(t) // 2
    s = [partial_sum(t, k) for k in range(2 * l + 1)]
    top = s[2 * l]
    val = Fraction((top + 1) * _fact(2 * top + 1), _fact(2 * t.even + 1))
    for i in range(1, l + 1):
        val *= Fraction(_fact(top - s[2 * i - 1]), _fact(top + s[2 * i - 1] + 1))
    for i in range(1, l):
        val *= Fraction(_fact(top + s[2 * i] + 1), _fact(top - s[2 * i]))
    return val


def qk_ratio_kp(t: Fern) -> Fraction:
    """Closed form of K'(t with last entry + 1) / K'(t) for even-length t."""
    l = len(t) // 2
    s = [partial_sum(t, k) for k in range(2 * l + 1)]
    top = s[2 * l]
    val = Fraction(_fact(2 * top - 1), _fact(2 * t.even))
    for i in range(1, l + 1):
        val *= Fraction(_fact(top - s[2 * i - 1]), _fact(top + s[2 * i - 1] - 1))
    for i in range(1, l):
        val *= Fraction(_fact(top + s[2 * i] - 1), _fact(top - s[2 * i]))
    return val


def _qk_sides(t: Fern) -> dict[str, tuple[Fraction, Fraction]]:
    bumped = Fern(t.entries[:-1] + (t.entries[-1] + 1,))
    return {
        "QK-Q": (quartered_count("Q", bumped) / quartered_count("Q", t), qk_ratio_q(t)),
        "QK-Kp": (quartered_count("Kp", bumped) / quartered_count("Kp", t), qk_ratio_kp(t)),
    }


def _draw(rng: random.Random, sides_fn: Callable, draw_args: Callable):
    # resample until every identity in the group is pole-free
    while True:
        args = draw_args(rng)
        try:
            return args, sides_fn(*args)
        except (PoleError, DomainError, ZeroDivisionError):
            continue


def algebraic_identity_fuzz(trials: int, seed: int) -> list[VerificationRecord]:
    """Per trial: one (x, n, m) for the four T/V identities and one fern t for the two ratios."""
    if trials < 0:
        raise ParameterError("trials must be >= 0")
    rng = random.Random(seed)

    def tv_args(r):
        x = Fraction(r.randint(-12, 24), r.choice((1, 2)))
        return x, r.randint(-2, 9), r.randint(1, 5)

    def qk_args(r):
        l = r.randint(1, 3)
        return (Fern(tuple(r.randint(0, 3) for _ in range(2 * l))),)

    out = []
    for _ in range(trials):
        (x, n, m), tv = _draw(rng, _tv_sides, tv_args)
        (t,), qk = _draw(rng, _qk_sides, qk_args)
        for name, (lhs, rhs) in tv.items():
            out.append(VerificationRecord("identity", name, {"x": x, "n": n, "m": m}, rhs, lhs, lhs == rhs))
        for name, (lhs, rhs) in qk.items():
            out.append(VerificationRecord("identity", name, {"a": str(t)}, rhs, lhs, lhs == rhs))
    return out


# -- check records for the CLI -------------------------------------------------

def _guarded(check: str, family: str, p: Params, fn: Callable) -> VerificationRecord:
    pd = _params_dict(p)
    try:
        (lhs, rhs), ms = _timed(fn)
    except ParameterError as e:
        return VerificationRecord(check, family, pd, None, None, False, skipped=f"infeasible: {e}")
    except (PoleError, DomainError) as e:
        return VerificationRecord(check, family, pd, None, None, False, skipped=f"pole: {e}")
    except CapacityError as e:
        return VerificationRecord(check, family, pd, None, None, False, skipped=f"capacity: {e}")
    return VerificationRecord(check, family, pd, lhs, rhs, lhs == rhs, ms=ms)


def recurrence_record(tag: str, p: Params) -> VerificationRecord:
    def fn():
        k = recurrence_counts(tag, p)
        return k.full * k.all_four, k.uv * k.ws + k.us * k.vw
    return _guarded("recurrence", tag, p, fn)


def base_split_record(tag: str, p: Params) -> VerificationRecord:
    return _guarded("base_split", tag, p, lambda: base_split_values(tag, p))


def factorization_record(kind: str, p: Params) -> VerificationRecord:
    return _guarded("factorization", kind, p, lambda: factorization_values(kind, p))


def structural_checks(grid: ParameterGrid, tags: Iterable[str],
                      symmetric: bool = True) -> list[VerificationRecord]:
    """Recurrence and base-split records for H1/R1 in ``tags``, plus S1/S2 factorizations."""
    tags = [t for t in FAMILIES if t in set(tags)]
    out = []
    for tag in (t for t in ("H1", "R1") if t in tags):
        for p in grid.points():
            if min(p.x, p.y, p.z) >= 1 and p.b.entries and p.b.entries[-1] > 0:
                out.append(recurrence_record(tag, p))
            if p.x == 0 or p.y == 0:
                out.append(base_split_record(tag, p))
    if symmetric:
        for kind in SYMMETRIC_KINDS:
            for p in grid.points():
                if (p.x - p.y) % 2 == 0 and p.a.entries:
                    out.append(factorization_record(kind, p))
    return out


# -- reports -----------------------------------------------------------------

def summarize(records: Sequence[VerificationRecord]) -> dict:
    done = [r for r in records if not r.skipped]
    return {"total": len(records), "performed": len(done), "matched": sum(r.match for r in done),
            "mismatched": sum(not r.match for r in done), "skipped": len(records) - len(done)}


def all_match(records: Sequence[VerificationRecord]) -> bool:
    return all(r.match for r in records if not r.skipped)


def records_to_csv(records: Sequence[VerificationRecord]) -> str:
    buf = io.StringIO()
    wr = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    wr.writeheader()
    for r in records:
        wr.writerow(r.row())
    return buf.getvalue()


def records_to_json(records: Sequence[VerificationRecord]) -> str:
    return json.dumps({"summary": summarize(records), "records": [r.row() for r in records]},
                      indent=2)
