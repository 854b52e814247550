import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from centdim.young import (
    Dominance,
    conjugate,
    dominance_compare,
    format_partition,
    hook_length,
    involutions_with_fixed_points,
    kostka,
    kostka_hook_type,
    num_skew_syt,
    num_syt,
    parse_partition,
    partitions_of,
)


@st.composite
def partitions(draw, max_size=10):
    n = draw(st.integers(min_value=0, max_value=max_size))
    return draw(st.sampled_from(partitions_of(n))) if n else ()


def syt_by_growth(shape):
    """Count standard tableaux by placing 1..n one cell at a time."""

    def rec(filled):
        if filled == shape:
            return 1
        total = 0
        for i in range(len(shape)):
            if filled[i] < shape[i] and (i == 0 or filled[i - 1] > filled[i]):
                total += rec(filled[:i] + (filled[i] + 1,) + filled[i + 1 :])
        return total

    return rec((0,) * len(shape))


def syt_by_filter(shape):
    """Count standard tableaux the slow way: filter all fillings."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for perm in itertools.permutations(range(len(cells))):
        grid = dict(zip(cells, perm))
        ok = all(
            (j + 1 >= shape[i] or grid[(i, j + 1)] > v)
            and (i + 1 >= len(shape) or shape[i + 1] <= j or grid[(i + 1, j)] > v)
            for (i, j), v in grid.items()
        )
        count += ok
    return count


def test_conjugate_examples():
    assert conjugate((6, 4, 3, 2, 2)) == (5, 5, 3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


@given(partitions(max_size=12))
def test_conjugate_is_involutive(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_dominance_examples():
    assert dominance_compare((3, 1), (2, 2)) == Dominance.GREATER
    assert dominance_compare((2, 2), (3, 1)) == Dominance.LESS
    assert dominance_compare((3, 1, 1, 1), (2, 2, 2)) == Dominance.INCOMPARABLE
    assert dominance_compare((2, 1), (2, 1)) == Dominance.EQUAL
    with pytest.raises(ValueError):
        dominance_compare((3, 1), (2, 2, 2))


@given(partitions(max_size=9), partitions(max_size=9))
def test_dominance_antisymmetry(lam, mu):
    if sum(lam) != sum(mu):
        return
    a = dominance_compare(lam, mu)
    b = dominance_compare(mu, lam)
    flip = {
        Dominance.LESS: Dominance.GREATER,
        Dominance.GREATER: Dominance.LESS,
        Dominance.EQUAL: Dominance.EQUAL,
        Dominance.INCOMPARABLE: Dominance.INCOMPARABLE,
    }
    assert b == flip[a]
    assert (a == Dominance.EQUAL) == (lam == mu)


def test_hook_length_examples():
    assert hook_length((6, 4, 3, 2, 2), 2, 2) == 6
    assert hook_length((2, 2), 1, 1) == 3
    assert hook_length((1,), 1, 1) == 1
    with pytest.raises(ValueError):
        hook_length((6, 4, 3, 2, 2), 2, 5)
    with pytest.raises(ValueError):
        hook_length((2, 2), 3, 1)


def test_num_syt_small_shapes_brute_force():
    for n in range(9):
        for lam in partitions_of(n):
            assert num_syt(lam) == syt_by_growth(lam), lam
    for n in range(6):
        for lam in partitions_of(n):
            assert num_syt(lam) == syt_by_filter(lam), lam


def test_num_syt_squares_sum_to_factorial():
    for n in range(9):
        assert sum(num_syt(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_num_skew_syt_examples():
    assert num_skew_syt((2, 2), (1,)) == 2
    assert num_skew_syt((2, 2), (2,)) == 1
    assert num_skew_syt((2, 2)) == num_syt((2, 2)) == 2
    assert num_skew_syt((3, 1), (3, 1)) == 1
    with pytest.raises(ValueError):
        num_skew_syt((2, 2), (3,))


def test_kostka_examples():
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    assert kostka((2, 2), (3, 1)) == 0
    assert kostka((), ()) == 1
    with pytest.raises(ValueError):
        kostka((2, 2), (2, 1))


@given(partitions(max_size=8))
def test_kostka_standard_content_is_syt_count(lam):
    assert kostka(lam, (1,) * sum(lam)) == num_syt(lam)


def test_kostka_vanishes_below_dominance():
    for n in range(8):
        for lam in partitions_of(n):
            for gamma in partitions_of(n):
                rel = dominance_compare(lam, gamma)
                if rel in (Dominance.LESS, Dominance.INCOMPARABLE):
                    assert kostka(lam, gamma) == 0, (lam, gamma)
                else:
                    assert kostka(lam, gamma) >= 1, (lam, gamma)


def test_kostka_hook_type_examples():
    assert kostka_hook_type((2, 2), 4, 2) == 1
    assert kostka_hook_type((2, 2), 4, 1) == 0
    for n in range(1, 7):
        for t in range(n + 1):
            assert kostka_hook_type((n,), n, t) == 1
    with pytest.raises(ValueError):
        kostka_hook_type((2, 2), 5, 1)
    with pytest.raises(ValueError):
        kostka_hook_type((2, 2), 4, 5)


def test_kostka_hook_type_cross_checked_against_kostka():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for t in range(n + 1):
                hook = (n - t,) + (1,) * t if t < n else (1,) * n
                assert kostka_hook_type(lam, n, t) == kostka(lam, hook), (lam, t)
            # the two spellings of the all-ones type agree
            assert kostka_hook_type(lam, n, n) == kostka_hook_type(lam, n, n - 1)


def test_partitions_of_order_and_counts():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions_of(6)) == 11
    for n in range(10):
        parts = partitions_of(n)
        assert list(parts) == sorted(parts, reverse=True)


def brute_force_involutions(r):
    by_fixed = {}
    for perm in itertools.permutations(range(r)):
        if all(perm[perm[i]] == i for i in range(r)):
            fixed = sum(1 for i in range(r) if perm[i] == i)
            by_fixed[fixed] = by_fixed.get(fixed, 0) + 1
    return by_fixed


def test_involutions_with_fixed_points():
    assert involutions_with_fixed_points(4, 4) == 1
    assert involutions_with_fixed_points(4, 2) == 6
    assert involutions_with_fixed_points(4, 0) == 3
    assert involutions_with_fixed_points(5, 2) == 0
    with pytest.raises(ValueError):
        involutions_with_fixed_points(3, 4)
    for r in range(8):
        counts = brute_force_involutions(r)
        for p in range(r + 1):
            assert involutions_with_fixed_points(r, p) == counts.get(p, 0), (r, p)


def test_parse_and_format_partition():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("empty") == ()
    assert format_partition((3, 1, 1)) == "3,1,1"
    assert format_partition(()) == "empty"
    with pytest.raises(ValueError):
        parse_partition("1,3")
    with pytest.raises(ValueError):
        parse_partition("3,x")
    with pytest.raises(ValueError):
        parse_partition("3,0")


@given(partitions(max_size=12))
def test_partition_text_roundtrip(lam):
    assert parse_partition(format_partition(lam)) == lam
