from fractions import Fraction

import pytest

from snwalk import (
    BadIndices,
    BadK,
    BadN,
    CharDecomposition,
    ClassFunction,
    Partition,
    StatisticId,
    TooLarge,
    character,
    class_elements,
    class_size,
    decompose,
    empirical_mean_statistic,
    enumerate_partitions,
    inversion_count_above,
    mean_value,
    project,
)
from snwalk.perms import builtin_statistics


def stat(name, k=None):
    return StatisticId.parse(name, k)


def test_mean_value_spot_checks():
    for n in range(2, 8):
        assert mean_value(stat("exc"), Partition((1,) * n)) == 0
        assert mean_value(stat("wexc"), Partition((1,) * n)) == n
    assert mean_value(stat("des"), Partition((3,))) == 1
    assert mean_value(stat("inv"), Partition((2, 1))) == Fraction(5, 3)
    assert mean_value(stat("cyc_2"), Partition((2, 2, 1))) == 4
    assert mean_value(stat("cyc_3"), Partition((2, 2, 1))) == 0
    with pytest.raises(BadK):
        mean_value(StatisticId("cyc", 9), Partition((2, 1)))


@pytest.mark.parametrize("n", range(1, 7))
def test_mean_value_matches_enumeration(n):
    for st in builtin_statistics(n):
        empirical = empirical_mean_statistic(st, n)
        for mu in enumerate_partitions(n):
            assert empirical(mu) == mean_value(st, mu), (st, mu)


def test_empirical_values_small():
    inv3 = empirical_mean_statistic(stat("inv"), 3)
    assert inv3(Partition((1, 1, 1))) == 0
    assert inv3(Partition((2, 1))) == Fraction(5, 3)
    assert inv3(Partition((3,))) == 2
    des2 = empirical_mean_statistic(stat("des"), 2)
    assert des2(Partition((1, 1))) == 0
    assert des2(Partition((2,))) == 1
    with pytest.raises(TooLarge):
        empirical_mean_statistic(stat("des"), 9)


def test_inversion_count_spot_checks():
    assert inversion_count_above(Partition((2,)), 1, 2) == 1
    assert inversion_count_above(Partition((3,)), 1, 3) == 2
    for n in range(2, 7):
        lam = Partition((1,) * n)
        for i in range(1, n):
            assert inversion_count_above(lam, i, n) == 0
    with pytest.raises(BadIndices):
        inversion_count_above(Partition((2, 1)), 2, 2)
    with pytest.raises(BadIndices):
        inversion_count_above(Partition((2, 1)), 0, 2)


@pytest.mark.parametrize("n", range(2, 6))
def test_inversion_count_matches_bruteforce(n):
    for lam in enumerate_partitions(n):
        elements = class_elements(lam)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                direct = sum(1 for pi in elements if pi(i) > pi(j))
                assert inversion_count_above(lam, i, j) == direct


@pytest.mark.parametrize("n", range(2, 8))
def test_inversion_count_sums_give_means(n):
    for lam in enumerate_partitions(n):
        size = class_size(lam)
        des_sum = sum(inversion_count_above(lam, i, i + 1) for i in range(1, n))
        maj_sum = sum(i * inversion_count_above(lam, i, i + 1) for i in range(1, n))
        inv_sum = sum(
            inversion_count_above(lam, i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        )
        assert Fraction(des_sum, size) == mean_value(stat("des"), lam)
        assert Fraction(maj_sum, size) == mean_value(stat("maj"), lam)
        assert Fraction(inv_sum, size) == mean_value(stat("inv"), lam)


def test_decompose_spot_checks():
    exc5 = decompose(stat("exc"), 5)
    assert exc5.coeffs == {
        Partition((5,)): Fraction(2),
        Partition((4, 1)): Fraction(-1, 2),
    }
    cyc1 = decompose(stat("cyc_1"), 4)
    assert cyc1.coeffs == {
        Partition((4,)): Fraction(1),
        Partition((3, 1)): Fraction(1),
    }
    with pytest.raises(BadN):
        decompose(stat("des"), 1)
    with pytest.raises(BadK):
        decompose(StatisticId("cyc", 5), 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_maj_is_half_n_times_des(n):
    des = decompose(stat("des"), n)
    maj = decompose(stat("maj"), n)
    assert maj.coeffs == {
        lam: Fraction(n, 2) * c for lam, c in des.coeffs.items()
    }


@pytest.mark.parametrize("n", range(2, 7))
def test_decomposition_reconstructs_mean(n):
    for st in builtin_statistics(n):
        decomp = decompose(st, n)
        for mu in enumerate_partitions(n):
            assert decomp(mu) == mean_value(st, mu), (st, mu)


def test_cycle_decomposition_signs_and_shapes():
    for n in range(1, 13):
        for k in range(1, n + 1):
            decomp = decompose(StatisticId("cyc", k), n)
            for lam, coeff in decomp.coeffs.items():
                assert lam.n == n  # Partition construction validates shape
                assert abs(coeff) == 1


@pytest.mark.parametrize("n", range(4, 7))
def test_full_cycle_count_statistic(n):
    decomp = decompose(StatisticId("cyc", n), n)
    assert decomp(Partition((n,))) == n
    for mu in enumerate_partitions(n):
        if mu != (n,):
            assert decomp(mu) == 0


def test_project_trivial_cases():
    n = 5
    ones = ClassFunction.tabulate(n, lambda mu: 1)
    assert project(ones).coeffs == {Partition((n,)): Fraction(1)}
    for lam in enumerate_partitions(n):
        chi = ClassFunction.tabulate(n, lambda mu: character(lam, mu))
        assert project(chi).coeffs == {lam: Fraction(1)}


@pytest.mark.parametrize("n", range(2, 7))
def test_project_recovers_decompositions(n):
    for st in builtin_statistics(n):
        oracle = project(empirical_mean_statistic(st, n))
        assert oracle == decompose(st, n), st


def test_class_function_domain_validation():
    with pytest.raises(ValueError):
        ClassFunction(3, {Partition((3,)): Fraction(1)})


def test_char_decomposition_json_round_trip():
    decomp = decompose(stat("inv"), 6)
    again = CharDecomposition.from_json(decomp.to_json())
    assert again == decomp
    text = decompose(stat("exc"), 5).to_json()
    assert '"lambda": "5"' in text and '"value": "2"' in text


def test_char_decomposition_drops_zeros():
    decomp = CharDecomposition(
        3, {Partition((3,)): Fraction(0), Partition((2, 1)): Fraction(1, 2)}
    )
    assert Partition((3,)) not in decomp.coeffs
    assert decomp.coefficient(Partition((3,))) == 0
