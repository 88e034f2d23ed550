import math

import pytest

from snwalk import (
    Partition,
    class_size,
    enumerate_partitions,
    partition_stats,
    removable_border_strips,
    z_order,
)
from snwalk.perms import cycle_type, iter_perms


def naive_partitions(n, largest=None):
    """Independent enumeration by recursion on the largest part."""
    if n == 0:
        return [()]
    largest = n if largest is None else largest
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in naive_partitions(n - first, first))
    return out


def test_partition_validation():
    assert Partition((3, 1, 1)).n == 5
    assert Partition(()).n == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_partition_text():
    assert Partition.from_text("3,1,1") == (3, 1, 1)
    assert Partition.from_text("3,1^2") == (3, 1, 1)
    assert Partition.from_text(" 7 , 3^4 , 1 ") == (7, 3, 3, 3, 3, 1)
    assert str(Partition((3, 1, 1))) == "3,1,1"
    with pytest.raises(ValueError):
        Partition.from_text("3,,1")
    with pytest.raises(ValueError):
        Partition.from_text("1,3")


def test_enumerate_small():
    assert enumerate_partitions(0) == [Partition(())]
    assert enumerate_partitions(4) == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert len(enumerate_partitions(7)) == 15


@pytest.mark.parametrize("n", range(0, 9))
def test_enumerate_matches_naive(n):
    got = enumerate_partitions(n)
    assert [tuple(p) for p in got] == naive_partitions(n)
    assert len(set(got)) == len(got)
    for p in got:
        assert p.n == n  # Partition constructor enforces the shape invariants


def test_enumerate_order_is_reverse_lex():
    for n in range(1, 10):
        parts = enumerate_partitions(n)
        assert parts[0] == (n,)
        assert all(a > b for a, b in zip(parts, parts[1:]))


def test_z_order():
    assert z_order(Partition((1, 1, 1))) == 6
    assert z_order(Partition((2, 1))) == 2
    for n in range(1, 9):
        assert z_order(Partition((n,))) == n


def test_class_sizes():
    assert class_size(Partition((3, 2))) == 20
    assert class_size(Partition((2, 1, 1))) == 6
    for n in range(2, 9):
        transposition_type = Partition((2,) + (1,) * (n - 2))
        assert class_size(transposition_type) == n * (n - 1) // 2
        assert class_size(Partition((1,) * n)) == 1
        assert class_size(Partition((n,))) == math.factorial(n - 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_class_sizes_sum_to_group_order(n):
    total = sum(class_size(lam) for lam in enumerate_partitions(n))
    assert total == math.factorial(n)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_class_size_by_enumeration(n):
    from collections import Counter

    counts = Counter(cycle_type(pi) for pi in iter_perms(n))
    for lam in enumerate_partitions(n):
        assert counts[lam] == class_size(lam)


def test_partition_stats():
    st = partition_stats(Partition((3, 2, 2, 1, 1, 1)))
    assert st.p == 3 and st.q == 2
    assert st.multiplicity(3) == 1 and st.multiplicity(5) == 0
    assert sum(size * mult for size, mult in st.part_multiplicities) == 10


def test_border_strips_full_row():
    for n in range(1, 8):
        assert removable_border_strips(Partition((n,)), n) == [(Partition(()), 0)]


def test_border_strips_square():
    # the two ways to peel two cells off the 2x2 square: the bottom row
    # (one row, height 0) leaves (2); the right column (two rows, height 1)
    # leaves (1,1)
    got = removable_border_strips(Partition((2, 2)), 2)
    assert sorted(got) == [(Partition((1, 1)), 1), (Partition((2,)), 0)]


def test_border_strips_hook_is_a_single_strip():
    assert removable_border_strips(Partition((3, 1)), 4) == [(Partition(()), 1)]
    assert removable_border_strips(Partition((2, 2)), 4) == []


def corners(lam):
    return [
        i for i in range(len(lam)) if i == len(lam) - 1 or lam[i] > lam[i + 1]
    ]


@pytest.mark.parametrize("n", range(1, 9))
def test_single_cell_strips_are_corners(n):
    for lam in enumerate_partitions(n):
        strips = removable_border_strips(lam, 1)
        assert all(height == 0 for _, height in strips)
        assert len(strips) == len(corners(lam))
        for smaller, _ in strips:
            assert smaller.n == n - 1


@pytest.mark.parametrize("n", range(1, 9))
def test_strip_removal_size_round_trip(n):
    for lam in enumerate_partitions(n):
        for size in range(1, n + 1):
            for smaller, height in removable_border_strips(lam, size):
                assert lam.n - smaller.n == size
                assert 0 <= height < size
