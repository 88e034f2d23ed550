import itertools

import pytest

from snwalk import (
    BadK,
    Partition,
    Perm,
    SizeMismatch,
    StatisticId,
    builtin_statistics,
    class_elements,
    class_size,
    compose,
    cycle_type,
    evaluate,
    iter_perms,
)


def test_perm_basics():
    pi = Perm((3, 1, 2))
    assert pi(1) == 3 and pi(3) == 2
    assert pi.n == 3
    assert Perm.identity(4) == (1, 2, 3, 4)
    with pytest.raises(ValueError):
        Perm((1, 1, 3))
    with pytest.raises(ValueError):
        Perm((0, 1, 2))


def test_perm_text():
    assert Perm.from_text("3,1,2") == (3, 1, 2)
    assert str(Perm((3, 1, 2))) == "3,1,2"
    # cycle sugar: (1 3 2) sends 1->3, 3->2, 2->1
    assert Perm.from_text("(1 3 2)") == (3, 1, 2)
    assert Perm.from_text("(1 3 2)(4 5)", n=6) == (3, 1, 2, 5, 4, 6)
    assert Perm.from_text("(2,4)", n=4) == (1, 4, 3, 2)
    with pytest.raises(ValueError):
        Perm.from_text("(1 2)(2 3)")
    with pytest.raises(SizeMismatch):
        Perm.from_text("2,1", n=3)


def test_compose_convention():
    # compose(a, b)(i) = a(b(i)): the right factor acts first
    a = Perm.from_text("(1 2)", n=3)
    b = Perm.from_text("(2 3)", n=3)
    assert compose(a, Perm.identity(3)) == a
    assert compose(a, a) == Perm.identity(3)
    assert cycle_type(compose(a, b)) == Partition((3,))
    assert compose(a, b) == (2, 3, 1)
    with pytest.raises(SizeMismatch):
        compose(Perm.identity(2), Perm.identity(3))


def test_cycle_type():
    assert cycle_type(Perm.identity(5)) == Partition((1,) * 5)
    assert cycle_type(Perm((2, 1, 4, 3))) == Partition((2, 2))
    for n in range(2, 7):
        ncycle = Perm(tuple(range(2, n + 1)) + (1,))
        assert cycle_type(ncycle) == Partition((n,))


def test_statistic_id():
    assert str(StatisticId.parse("cyc_3")) == "cyc_3"
    assert StatisticId.parse("cyc", 2) == StatisticId("cyc", 2)
    assert StatisticId.parse("maj") == StatisticId("maj")
    with pytest.raises(ValueError):
        StatisticId("nope")
    with pytest.raises(ValueError):
        StatisticId("cyc")
    with pytest.raises(ValueError):
        StatisticId("exc", 2)


def stat(name, k=None):
    return StatisticId.parse(name, k)


def test_identity_values():
    ident = Perm.identity(4)
    values = {
        "exc": 0,
        "wexc": 4,
        "des": 0,
        "maj": 0,
        "inv": 0,
    }
    for name, want in values.items():
        assert evaluate(stat(name), ident) == want
    assert evaluate(stat("cyc_1"), ident) == 4
    assert evaluate(stat("cyc_2"), ident) == 0


def test_three_cycle_values():
    # no fixed points, so weak excedances equal excedances here
    pi = Perm((3, 1, 2))
    assert evaluate(stat("exc"), pi) == 1
    assert evaluate(stat("wexc"), pi) == 1
    assert evaluate(stat("des"), pi) == 1
    assert evaluate(stat("maj"), pi) == 1
    assert evaluate(stat("inv"), pi) == 2
    assert evaluate(stat("cyc_3"), pi) == 3


@pytest.mark.parametrize("n", range(2, 8))
def test_reverse_permutation_extremes(n):
    rev = Perm(tuple(range(n, 0, -1)))
    assert evaluate(stat("inv"), rev) == n * (n - 1) // 2
    assert evaluate(stat("des"), rev) == n - 1
    assert evaluate(stat("maj"), rev) == n * (n - 1) // 2


def test_bad_k():
    with pytest.raises(BadK):
        evaluate(StatisticId("cyc", 9), Perm.identity(3))


@pytest.mark.parametrize("n", range(1, 8))
def test_weak_excedance_gap_is_fixed_points(n):
    for pi in iter_perms(n):
        fixed = sum(1 for i in range(1, n + 1) if pi(i) == i)
        assert evaluate(stat("wexc"), pi) - evaluate(stat("exc"), pi) == fixed


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_counts_partition_the_points(n):
    for pi in iter_perms(n):
        assert sum(evaluate(StatisticId("cyc", k), pi) for k in range(1, n + 1)) == n
        for k in range(1, n + 1):
            assert evaluate(StatisticId("cyc", k), pi) % k == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_major_index_is_descent_position_sum(n):
    for pi in iter_perms(n):
        positions = [i for i in range(1, n) if pi(i) > pi(i + 1)]
        assert evaluate(stat("des"), pi) == len(positions)
        assert evaluate(stat("maj"), pi) == sum(positions)


@pytest.mark.parametrize("n", range(1, 8))
def test_total_inversions_equal_total_major_index(n):
    totals = [0, 0]
    for pi in iter_perms(n):
        totals[0] += evaluate(stat("inv"), pi)
        totals[1] += evaluate(stat("maj"), pi)
    assert totals[0] == totals[1]


def test_builtin_statistics():
    stats = builtin_statistics(4)
    assert len(stats) == 9
    assert StatisticId("cyc", 4) in stats


@pytest.mark.parametrize("n", range(1, 7))
def test_class_elements(n):
    seen = 0
    for lam in set(map(cycle_type, iter_perms(n))):
        elements = class_elements(lam)
        assert len(elements) == class_size(lam)
        assert all(cycle_type(pi) == lam for pi in elements)
        seen += len(elements)
    assert seen == sum(1 for _ in itertools.permutations(range(n)))
