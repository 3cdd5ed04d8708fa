import pytest
from hypothesis import given, strategies as st

from halvedhex.ferns import Fern, as_fern, concat, fern_sums, partial_sum, plus_one

ferns = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Fern(tuple(xs)))


@pytest.mark.parametrize("f, want", [((), (0, 0, 0, 0)), ((2, 3, 1), (6, 3, 3, 3)),
                                     ((0, 4), (4, 4, 0, 1))])
def test_fern_sums(f, want):
    assert tuple(fern_sums(f)) == want


@pytest.mark.parametrize("k, want", [(0, 0), (2, 5), (5, 6)])
def test_partial_sum(k, want):
    assert partial_sum((2, 3, 1), k) == want


@pytest.mark.parametrize("f, want", [((2, 3), (2, 4)), ((2, 3, 1), (2, 3, 1, 1)), ((), (1,))])
def test_plus_one(f, want):
    assert plus_one(f).entries == want


def test_entry_is_one_based_and_zero_padded():
    f = Fern.of(4, 5)
    assert (f.entry(1), f.entry(2), f.entry(3), f.entry(0)) == (4, 5, 0, 0)


def test_parse_and_negative_entries():
    assert Fern.parse("(2, 3)") == Fern.of(2, 3)
    assert Fern.parse("()") == Fern()
    assert as_fern("1,1") == Fern.of(1, 1)
    with pytest.raises(ValueError):
        Fern.of(1, -1)


@given(ferns)
def test_sums_split_by_parity(f):
    s = fern_sums(f)
    assert s.total == s.even_sum + s.odd_sum == partial_sum(f, len(f))


@given(ferns)
def test_plus_one_adds_one(f):
    g = plus_one(f)
    assert g.total == f.total + 1
    assert len(g) in (len(f), len(f) + 1)
    if len(f):
        assert len(g) % 2 == 0


@given(ferns, ferns)
def test_concat_totals(f, g):
    assert concat(f, g).total == f.total + g.total
