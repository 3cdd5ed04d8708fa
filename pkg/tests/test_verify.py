import csv
import io
import json
from math import atan2

import pytest

from halvedhex.families import build_hexagon
from halvedhex.formulas import ParameterError, Params
from halvedhex.lattice import Down, Region, Up
from halvedhex.verify import (CSV_COLUMNS, ParameterGrid, algebraic_identity_fuzz,
                              base_split_check, base_split_sequences, factorization_check,
                              kuo_check, kuo_counts, kuo_placement, kuo_region_check,
                              records_to_csv, records_to_json, recurrence_check, summarize,
                              sweep)

ZERO = ParameterGrid((0,), (0,), (0,), ((),), ((),))


def _cyclic(r: Region):
    """Cells of a small region ordered by angle around its centre."""
    pts = {c: [sum(p + q / 2 for p, q in c.corners()) / 3, sum(q for _, q in c.corners()) / 3]
           for c in r.cells}
    cx = sum(v[0] for v in pts.values()) / len(pts)
    cy = sum(v[1] for v in pts.values()) / len(pts)
    return sorted(r.cells, key=lambda c: atan2(pts[c][1] - cy, pts[c][0] - cx))


def test_sweep_trivial_point():
    (rec,) = sweep({"H1"}, ZERO)
    assert (rec.formula, rec.oracle, rec.match, rec.skipped) == (1, 1, True, None)


def test_sweep_records_skips_and_keeps_order():
    grid = ParameterGrid((0, 1), (0,), (0,), ((),), ((),))
    recs = sweep({"H2", "H1"}, grid)
    assert [(r.family, r.params["x"]) for r in recs] == [("H1", 0), ("H1", 1), ("H2", 0), ("H2", 1)]
    assert recs[2].skipped and recs[2].skipped.startswith("infeasible")
    with pytest.raises(ParameterError):
        sweep({"Z1"}, ZERO)


def test_sweep_figure_point():
    grid = ParameterGrid((2,), (1,), (2,), ((2, 2, 3),), ((2, 2),))
    (rec,) = sweep({"H1"}, grid)
    assert rec.match and rec.cells > 0


def test_parallel_sweep_matches_serial():
    grid = ParameterGrid((0, 1), (0, 1), (1,), ((), (1,)), ((1,),))
    serial = sweep({"H1", "W1"}, grid)
    parallel = sweep({"H1", "W1"}, grid, jobs=2)
    strip = lambda rs: [(r.family, r.params, r.formula, r.oracle, r.match) for r in rs]  # noqa: E731
    assert strip(serial) == strip(parallel)


def test_kuo_on_unit_hexagon():
    hexagon = build_hexagon(1, 1, 1)
    ring = _cyclic(hexagon)
    for k in range(6):
        u, v, w, s = (ring[(k + i) % 6] for i in range(4))
        if u.o == "U":
            assert kuo_check(hexagon, u, v, w, s)


def test_kuo_with_zero_subcounts():
    # a row of four cells is a path u-v-w-s; removing v, w strands u and s
    u, v, w, s = Up(0, 0), Down(0, 0), Up(1, 0), Down(1, 0)
    k = kuo_counts(Region({u, v, w, s}), u, v, w, s)
    assert k.vw == 0 and k.holds


def test_kuo_rejects_bad_roles():
    hexagon = build_hexagon(1, 1, 1)
    ups, downs = hexagon.ups(), hexagon.downs()
    with pytest.raises(ParameterError):
        kuo_check(hexagon, ups[0], ups[1], downs[0], downs[1])
    with pytest.raises(ParameterError):
        kuo_check(hexagon, Up(50, 50), downs[0], ups[1], downs[1])


@pytest.mark.parametrize("tag, p", [
    ("H1", Params(1, 1, 1, (1,), (1,))),
    ("R1", Params(1, 1, 1, (1,), (2,))),
    ("H1", Params(2, 1, 2, (2, 2), (2,))),
])
def test_recurrence_examples(tag, p):
    assert recurrence_check(tag, p)


def test_recurrence_preconditions():
    with pytest.raises(ParameterError):
        recurrence_check("H1", Params(0, 1, 1, (1,), (1,)))
    with pytest.raises(ParameterError):
        recurrence_check("H1", Params(1, 1, 1, (1,), ()))
    with pytest.raises(ParameterError):
        recurrence_check("H1", Params(1, 1, 1, (1,), (1, 0)))


@pytest.mark.parametrize("tag, p", [("H1", Params(1, 1, 1, (1,), (1,))),
                                    ("R1", Params(1, 2, 1, (2, 1), (1, 1)))])
def test_kuo_placement_reproduces_the_named_regions(tag, p):
    u, v, w, s = kuo_placement(tag, p)
    assert (u.o, v.o, w.o, s.o) == ("U", "D", "U", "D")
    assert kuo_region_check(tag, p)


@pytest.mark.parametrize("tag, p", [
    ("H1", Params(0, 1, 1, (1,), (1,))),
    ("H1", Params(1, 0, 1, (1, 1), (1,))),
    ("H1", Params()),
    ("R1", Params(0, 2, 1, (2, 1), (1,))),
    ("R1", Params(2, 0, 2, (1,), (2, 1))),
])
def test_base_split_examples(tag, p):
    assert base_split_check(tag, p)


def test_base_split_sequences_and_preconditions():
    up, lo = base_split_sequences("H1", Params(0, 1, 1, (1,), (1,)))
    assert up.entries == (0, 1 + 1 + 1) and lo.entries == (1, 1, 1, 1)
    with pytest.raises(ParameterError):
        base_split_check("H1", Params(1, 1, 1))
    with pytest.raises(ParameterError):
        base_split_check("W1", Params(0, 1, 1))


@pytest.mark.parametrize("kind, p", [
    ("S1", Params(a=(0,))),
    ("S1", Params(2, 2, 1, (2,), (1,))),
    ("S1", Params(1, 1, 1, (1,), (1,))),
    ("S2", Params(1, 1, 1, (1,), (1,))),
    ("S2", Params(2, 0, 1, (2,), (1,))),
])
def test_factorization_examples(kind, p):
    assert factorization_check(kind, p)


def test_factorization_preconditions():
    with pytest.raises(ParameterError):
        factorization_check("S1", Params(1, 0, 0, (1,), ()))
    with pytest.raises(ParameterError):
        factorization_check("S1", Params(1, 1, 1, (), ()))


def test_identity_fuzz():
    assert algebraic_identity_fuzz(0, 7) == []
    recs = algebraic_identity_fuzz(100, 7)
    assert len(recs) == 600 and all(r.match for r in recs)
    assert [r.row() for r in recs] == [r.row() for r in algebraic_identity_fuzz(100, 7)]
    names = {r.family for r in recs}
    assert names == {"TV1", "TV2", "TV3", "TV4", "QK-Q", "QK-Kp"}


def test_reports():
    recs = sweep({"H1", "H2"}, ParameterGrid((0, 1), (0,), (0,), ((),), ((),)))
    rows = list(csv.DictReader(io.StringIO(records_to_csv(recs))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert [r["match"] for r in rows] == ["true", "true", "skip", "skip"]
    doc = json.loads(records_to_json(recs))
    assert doc["summary"] == summarize(recs) == {"total": 4, "performed": 2, "matched": 2,
                                                 "mismatched": 0, "skipped": 2}
