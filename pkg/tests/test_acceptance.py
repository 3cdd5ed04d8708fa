"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line.  Run the module directly
(``python tests/test_acceptance.py``) for the same report without pytest.
"""
from __future__ import annotations

import sys
import time
from fractions import Fraction
from functools import cache
from itertools import product

import pytest

from halvedhex import (FAMILIES, QUARTERED_KINDS, ParameterError, ParameterGrid, Params,
                       PoleError, boundary_audit, build_halved, build_hexagon, build_proctor,
                       build_quartered, build_symmetric, count_tilings, count_tilings_determinant,
                       enumerate_tilings, halved_count, halved_count_ratio_form, is_balanced,
                       macmahon, proctor_count, proctor_weighted_count, quartered_count, sweep)
from halvedhex.products import DomainError
from halvedhex.verify import (algebraic_identity_fuzz, base_split_record, factorization_record,
                              recurrence_record, summarize)

GRID = ParameterGrid()
SWEEP_BUDGET_S = 300


def _line(n: int, ok: bool, detail: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"


@cache
def _sweep():
    t0 = time.perf_counter()
    recs = sweep(FAMILIES, GRID)
    return recs, time.perf_counter() - t0


def criterion_1():
    recs, secs = _sweep()
    s = summarize(recs)
    ok = s["performed"] >= 400 and s["mismatched"] == 0 and secs < SWEEP_BUDGET_S
    return ok, (f"halved sweep {s['performed']} compared, {s['mismatched']} mismatched, "
                f"{s['skipped']} infeasible, {secs:.0f}s")


def _all_t(max_len: int, max_entry: int):
    for n in range(max_len + 1):
        yield from product(range(max_entry + 1), repeat=n)


LONGER_FERNS = [(2, 1, 2, 2), (0, 1, 1, 1, 2, 2), (3, 1, 2, 2), (0, 2, 1, 1, 2, 2)]


def criterion_2():
    done = bad = skipped = 0
    for kind in QUARTERED_KINDS:
        for t in list(_all_t(4, 2)) + LONGER_FERNS:
            try:
                region = build_quartered(kind, t)
            except ParameterError:
                # K-type regions do not exist when the even-index sum is 0
                skipped += 1
                continue
            done += 1
            bad += quartered_count(kind, t) != count_tilings(region)
    return bad == 0 and done > 0, f"quartered {done} compared, {bad} mismatched, {skipped} K with zero even sum"


def criterion_3():
    bad = done = 0
    for a, b, c in product(range(4), repeat=3):
        done += 1
        bad += macmahon(a, b, c) != count_tilings(build_hexagon(a, b, c))
    for a, b, c in product(range(4), repeat=3):
        if a > b:
            continue
        done += 2
        bad += proctor_count(a, b, c) != count_tilings(build_proctor("P", a, b, c))
        bad += proctor_weighted_count(a, b, c) != count_tilings(build_proctor("Pp", a, b, c))
    ok = bad == 0 and macmahon(2, 2, 2) == 20
    return ok, f"hexagon/Proctor {done} compared, {bad} mismatched"


def criterion_4():
    done = bad = poles = infeasible = 0
    for tag in FAMILIES:
        for p in GRID.points():
            try:
                lhs = halved_count(tag, p)
            except ParameterError:
                infeasible += 1
                continue
            except (PoleError, DomainError):
                poles += 1
                continue
            try:
                rhs = halved_count_ratio_form(tag, p)
            except (PoleError, DomainError):
                poles += 1
                continue
            done += 1
            bad += lhs != rhs
    return bad == 0 and done >= 400, (f"ratio form {done} compared, {bad} mismatched, "
                                      f"{poles} poles, {infeasible} infeasible")


RECURRENCE_POINTS = [Params(1, 1, 1, (), (1,)), Params(1, 1, 1, (1,), (1,)),
                     Params(2, 1, 1, (1,), (2,)), Params(1, 2, 1, (2,), (1,)),
                     Params(1, 1, 2, (1, 1), (1,)), Params(2, 2, 1, (), (2, 1)),
                     Params(1, 2, 2, (2, 1), (1, 1))]


def criterion_5():
    recs = [recurrence_record(tag, p) for tag in ("H1", "R1") for p in RECURRENCE_POINTS]
    s = summarize(recs)
    per = {tag: sum(1 for r in recs if r.family == tag and not r.skipped and r.match)
           for tag in ("H1", "R1")}
    ok = s["mismatched"] == 0 and min(per.values()) >= 5
    return ok, f"Kuo recurrence H1 {per['H1']} and R1 {per['R1']} matched, {s['mismatched']} mismatched"


def criterion_6():
    recs, cases = [], set()
    for tag in ("H1", "R1"):
        for p in GRID.points():
            if p.x == 0 or p.y == 0:
                recs.append(base_split_record(tag, p))
                m, n = max(len(p.a), 1), max(len(p.b), 1)
                cases.add((tag, m % 2, n % 2))
    s = summarize(recs)
    ok = s["mismatched"] == 0 and s["skipped"] == 0 and len(cases) == 8
    return ok, (f"base splits {s['performed']} compared, {s['mismatched']} mismatched, "
                f"{len(cases) // 2} (m,n) parity cases per family")


def criterion_7():
    recs, combos = [], set()
    for kind in ("S1", "S2"):
        for x, y, z in product(range(3), repeat=3):
            if (x - y) % 2:
                continue
            for a in [(0,), (1,), (2,), (1, 1), (2, 1), (0, 2)]:
                for b in [(), (1,), (1, 1)]:
                    rec = factorization_record(kind, Params(x, y, z, a, b))
                    recs.append(rec)
                    if not rec.skipped:
                        combos.add((kind, a[0] % 2, x % 2))
    s = summarize(recs)
    ok = s["mismatched"] == 0 and len(combos) == 8
    return ok, (f"factorization {s['performed']} compared, {s['mismatched']} mismatched, "
                f"{s['skipped']} skipped at degenerate halves, {len(combos) // 2} parity combos per kind")


def _oracle_regions():
    out = [(f"HEX{abc}", build_hexagon(*abc)) for abc in product(range(3), repeat=3)]
    out += [(f"{k}{abc}", build_proctor(k, *abc)) for k in ("P", "Pp")
            for abc in [(1, 1, 1), (1, 2, 1), (2, 2, 1), (1, 2, 2)]]
    out += [(f"{k}{t}", build_quartered(k, t)) for k in QUARTERED_KINDS
            for t in [(1, 1), (0, 2, 1, 1), (2, 1, 1, 1)]]
    for tag in FAMILIES:
        for p in (Params(1, 1, 1, (1,), (1,)), Params(0, 1, 1, (1,), ()), Params(1, 0, 0, (2,), (1,))):
            try:
                out.append((f"{tag} {p}", build_halved(tag, p)))
            except ParameterError:
                pass
    out += [(f"{k} {p}", build_symmetric(k, p)) for k in ("S1", "S2")
            for p in (Params(1, 1, 1, (1,), (1,)), Params(0, 0, 1, (2,), ()))]
    return out


def criterion_8():
    regions = _oracle_regions()
    bad, enumerated = [], 0
    builders = {name.split()[0].rstrip("0123456789(), ") for name, _ in regions}
    for name, r in regions:
        dp, det = count_tilings(r), count_tilings_determinant(r)
        if dp != det:
            bad.append(name)
            continue
        en = enumerate_tilings(r, 500)
        if en.complete:
            enumerated += 1
            if en.weighted_sum(r) != dp:
                bad.append(name)
    ok = not bad and len(regions) >= 50
    return ok, (f"oracles agree on {len(regions) - len(bad)}/{len(regions)} regions "
                f"from {len(builders)} builders, {enumerated} also enumerated")


def criterion_9():
    s = summarize(algebraic_identity_fuzz(100, 7))
    return s["mismatched"] == 0 and s["matched"] == 600, f"identity fuzz {s['matched']} matched, {s['mismatched']} mismatched"


def _dyadic_ok(value: Fraction, weighted: int) -> bool:
    return (2 ** weighted) % value.denominator == 0


def criterion_10():
    recs, _ = _sweep()
    oracle = {(r.family, r.params["x"], r.params["y"], r.params["z"], r.params["a"], r.params["b"]):
              r.oracle for r in recs if r.oracle is not None}
    problems, regions = [], 0
    for tag in FAMILIES:
        for p in GRID.points():
            try:
                r = build_halved(tag, p)
            except ParameterError:
                continue
            regions += 1
            audit = boundary_audit(tag, p)
            if not (is_balanced(r) and audit.ok):
                problems.append(f"{tag} {p} shape")
            val = oracle.get((tag, p.x, p.y, p.z, str(p.a), str(p.b)))
            if val is None:
                continue
            if val < 0 or not _dyadic_ok(val, len(r.weights)):
                problems.append(f"{tag} {p} value {val}")
            if not r.weights and val.denominator != 1:
                problems.append(f"{tag} {p} non-integer {val}")
    for name, r in _oracle_regions():
        regions += 1
        val = count_tilings(r)
        if not is_balanced(r) or val < 0 or not _dyadic_ok(val, len(r.weights)):
            problems.append(name)
    return not problems, f"invariants hold on {regions} regions, {len(problems)} violations"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_acceptance_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for n, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        results.append(ok)
        print(_line(n, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
