from collections import Counter

import pytest
from hypothesis import given, strategies as st

from kpetrie.partitions import (
    SkewShape,
    conjugate,
    connected_components,
    contains,
    content,
    dominance_leq,
    enumerate_partitions,
    enumerate_subpartitions,
    format_partition,
    horizontal_strip_extensions,
    is_horizontal_strip,
    is_vertical_strip,
    parse_partition,
    skew,
)


@st.composite
def partitions_st(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


@st.composite
def nested_pairs_st(draw, max_n=8):
    lam = draw(partitions_st(max_n=max_n))
    mu = draw(st.sampled_from(list(enumerate_subpartitions(lam))))
    return lam, mu


def all_pairs(max_size):
    for n in range(max_size + 1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_subpartitions(lam):
                yield lam, mu


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


@given(partitions_st(max_n=20))
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p


def test_contains_examples():
    assert contains((1,), (2, 1))
    assert not contains((2, 2), (3, 1))
    assert contains((), (4, 2))
    assert contains((), ())
    assert not contains((1, 1, 1), (3,))


def test_cells_and_content():
    s = SkewShape((3, 1), (2,))
    assert s.cells() == ((1, 3), (2, 1))
    assert s.size() == 2
    assert content((1, 3)) == 2
    assert content((3, 1)) == -2


def test_skew_validates():
    assert skew((2, 1), (1,)) == SkewShape((2, 1), (1,))
    with pytest.raises(ValueError):
        skew((1,), (2,))
    with pytest.raises(ValueError):
        skew((1, 2), ())


def test_horizontal_strip_examples():
    assert is_horizontal_strip(SkewShape((3, 1), (2,)))
    assert not is_horizontal_strip(SkewShape((2, 2), (1,)))
    assert is_horizontal_strip(SkewShape((2, 2), (2, 2)))


def test_vertical_strip_examples():
    assert not is_vertical_strip(SkewShape((2, 2), (1,)))
    assert is_vertical_strip(SkewShape((1, 1), ()))
    assert is_vertical_strip(SkewShape((3, 1), (3, 1)))


@given(nested_pairs_st(max_n=10))
def test_strip_duality(pair):
    lam, mu = pair
    shape = SkewShape(lam, mu)
    assert is_vertical_strip(shape) == is_horizontal_strip(shape.conjugate())


def _flood_components(cells):
    """Independent 4-adjacency flood fill over a cell set."""
    cells = set(cells)
    comps = []
    while cells:
        seen = set()
        stack = [min(cells)]
        while stack:
            c = stack.pop()
            if c in seen or c not in cells:
                continue
            seen.add(c)
            i, j = c
            stack.extend([(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)])
        comps.append(frozenset(seen))
        cells -= seen
    return comps


def _shift_rows(cells):
    """Normalise a cell set so its first row is row 1."""
    top = min(i for i, _ in cells)
    return frozenset((i - top + 1, j) for i, j in cells)


def test_components_examples():
    assert len(connected_components(SkewShape((2, 1), (1,)))) == 2
    assert all(c.size() == 1 for c in connected_components(SkewShape((2, 1), (1,))))
    assert len(connected_components(SkewShape((9, 8, 6, 5, 3, 2), (7, 6, 4, 3, 1)))) == 3
    assert len(connected_components(SkewShape((2, 2), (1,)))) == 1
    assert connected_components(SkewShape((3, 2), (3, 2))) == []


def test_components_match_flood_fill():
    for lam, mu in all_pairs(7):
        shape = SkewShape(lam, mu)
        comps = connected_components(shape)
        flood = _flood_components(shape.cells())
        assert len(comps) == len(flood)
        got = sorted(_shift_rows(c.cells()) for c in comps)
        want = sorted(_shift_rows(c) for c in flood)
        assert got == want, (lam, mu)
        # cell sets partition the shape
        combined = [cell for c in comps for cell in _shift_rows(c.cells())]
        assert len(combined) == shape.size()


def test_enumerate_partitions_examples():
    assert list(enumerate_partitions(0)) == [()]
    assert list(enumerate_partitions(3, 2)) == [(2, 1), (1, 1, 1)]
    assert len(list(enumerate_partitions(6))) == 11


def test_enumerate_partitions_counts_and_order():
    classic = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, expected in enumerate(classic):
        parts = list(enumerate_partitions(n))
        assert len(parts) == expected
        assert parts == sorted(parts, reverse=True)
        assert all(sum(p) == n for p in parts)
        assert len(set(parts)) == len(parts)


def test_enumerate_partitions_respects_max_part():
    for n in range(9):
        for cap in range(n + 2):
            got = list(enumerate_partitions(n, cap))
            want = [p for p in enumerate_partitions(n) if not p or p[0] <= cap]
            assert sorted(got, reverse=True) == sorted(want, reverse=True)


def test_subpartitions():
    subs = list(enumerate_subpartitions((2, 1)))
    assert subs == [(2, 1), (2,), (1, 1), (1,), ()]
    assert list(enumerate_subpartitions(())) == [()]


def test_horizontal_strip_extensions_examples():
    assert horizontal_strip_extensions((2,), (2,), 0) == [(2,)]
    assert horizontal_strip_extensions((1,), (2, 2), 1) == [(2,), (1, 1)]
    assert horizontal_strip_extensions((), (1, 1), 2) == []


def test_horizontal_strip_extensions_against_filter():
    for lam, mu in all_pairs(7):
        for n in range(sum(lam) - sum(mu) + 1):
            got = horizontal_strip_extensions(mu, lam, n)
            want = [
                nu
                for nu in enumerate_partitions(sum(mu) + n)
                if contains(mu, nu)
                and contains(nu, lam)
                and is_horizontal_strip(SkewShape(nu, mu))
            ]
            assert sorted(got, reverse=True) == sorted(want, reverse=True), (lam, mu, n)
            assert len(set(got)) == len(got)


def test_horizontal_strip_extensions_rejects_bad_pair():
    with pytest.raises(ValueError):
        horizontal_strip_extensions((3,), (2,), 1)


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (2, 1))
    assert not dominance_leq((2, 1), (1, 1, 1))
    assert dominance_leq((3, 1), (3, 1))
    assert not dominance_leq((2,), (1, 1, 1))  # sizes differ


@given(partitions_st(max_n=10))
def test_dominance_extremes(p):
    n = sum(p)
    assert dominance_leq(p, (n,) if n else ())
    assert dominance_leq((1,) * n, p)


def test_parse_and_format():
    assert parse_partition("5,3,1") == (5, 3, 1)
    assert parse_partition("") == ()
    assert parse_partition("-") == ()
    assert parse_partition(" 2,1 ") == (2, 1)
    assert format_partition((5, 3, 1)) == "5,3,1"
    assert format_partition(()) == "-"
    for bad in ("1,3", "0", "-1", "a", "2,,1"):
        with pytest.raises(ValueError):
            parse_partition(bad)


@given(partitions_st(max_n=12))
def test_parse_format_round_trip(p):
    assert parse_partition(format_partition(p)) == p
