from collections import Counter
from fractions import Fraction

import pytest

from snwalk import (
    BudgetExceeded,
    GeneratorSet,
    McReport,
    Partition,
    Perm,
    StatisticId,
    TooLarge,
    class_elements,
    class_size,
    class_transition_matrix,
    cycle_type,
    dp_distribution,
    enumerate_partitions,
    evaluate,
    exact_expectation_bruteforce,
    expectation,
    monte_carlo,
    walk_distribution,
)
from snwalk import kernels
from snwalk.oracles import representative
from snwalk.perms import builtin_statistics


def stat(name, k=None):
    return StatisticId.parse(name, k)


def test_representatives():
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            assert cycle_type(representative(lam)) == lam
            assert cycle_type(representative(lam, reverse=True)) == lam


def test_transition_matrix_s3():
    matrix = class_transition_matrix(GeneratorSet.transpositions(3))
    ident = Partition((1, 1, 1))
    swap = Partition((2, 1))
    full = Partition((3,))
    assert matrix[swap][ident] == 1
    assert matrix[ident][swap] == Fraction(1, 3)
    assert matrix[full][swap] == Fraction(2, 3)
    assert matrix[ident][full] == 0


@pytest.mark.parametrize("text", ["transpositions", "ncycles", "one-fixed-point"])
def test_transition_columns_sum_to_one(text):
    gamma = GeneratorSet.from_text(5, text)
    matrix = class_transition_matrix(gamma)
    for mu in enumerate_partitions(5):
        assert sum(matrix[nu][mu] for nu in matrix) == 1


def test_transition_matrix_size_guard():
    with pytest.raises(TooLarge):
        class_transition_matrix(GeneratorSet.transpositions(9))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dp_distribution_matches_character_engine(n):
    gamma = GeneratorSet.transpositions(n)
    for t in range(0, 9):
        assert dp_distribution(gamma, t) == walk_distribution(gamma, t)


def test_dp_distribution_mixed_union():
    gamma = GeneratorSet.from_text(5, "2,2,1;5")
    for t in range(0, 5):
        assert dp_distribution(gamma, t) == walk_distribution(gamma, t)


def test_bruteforce_spot_values():
    gamma = GeneratorSet.transpositions(3)
    assert exact_expectation_bruteforce(gamma, stat("exc"), 1) == 1
    for st in builtin_statistics(3):
        ident = Perm.identity(3)
        assert exact_expectation_bruteforce(gamma, st, 0) == evaluate(st, ident)


@pytest.mark.parametrize("text", ["transpositions", "ncycles", "2,2;4"])
def test_bruteforce_matches_engine_n4(text):
    gamma = GeneratorSet.from_text(4, text)
    for t in range(0, 4):
        for st in builtin_statistics(4):
            brute = exact_expectation_bruteforce(gamma, st, t, fallback_to_dp=False)
            assert brute == expectation(gamma, st, t).exact


def test_bruteforce_budget():
    gamma = GeneratorSet.ncycles(6)
    with pytest.raises(BudgetExceeded):
        exact_expectation_bruteforce(
            gamma, stat("exc"), 4, budget=10**6, fallback_to_dp=False
        )
    via_dp = exact_expectation_bruteforce(gamma, stat("exc"), 4, budget=10**6)
    assert via_dp == expectation(gamma, stat("exc"), 4).exact
    with pytest.raises(TooLarge):
        exact_expectation_bruteforce(GeneratorSet.transpositions(8), stat("exc"), 1)


def test_product_count_identity_via_dp():
    gamma = GeneratorSet.from_text(5, "2,1,1,1;5")
    for t in range(0, 4):
        from snwalk import count_products

        total = sum(
            class_size(nu) * count_products(gamma, t, nu)
            for nu in enumerate_partitions(5)
        )
        assert total == gamma.total**t
        assert sum(dp_distribution(gamma, t).values()) == 1


def test_monte_carlo_t_zero(backend):
    report = monte_carlo(GeneratorSet.transpositions(5), stat("inv"), 0, 500, seed=9)
    assert report.sample_mean == 0.0
    assert report.sample_stddev == 0.0
    assert report.z_score == 0.0


def test_monte_carlo_deterministic(backend):
    gamma = GeneratorSet.ncycles(6)
    a = monte_carlo(gamma, stat("cyc_2"), 3, 20000, seed=20250810)
    b = monte_carlo(gamma, stat("cyc_2"), 3, 20000, seed=20250810)
    assert a == b
    c = monte_carlo(gamma, stat("cyc_2"), 3, 20000, seed=20250810, stream=1)
    assert c.sample_mean != a.sample_mean
    assert a.rng == "splitmix64"


def test_monte_carlo_reference_cases():
    inv_report = monte_carlo(
        GeneratorSet.transpositions(8), stat("inv"), 5, 100_000, seed=20250810
    )
    assert abs(inv_report.z_score) < 4
    cyc_report = monte_carlo(
        GeneratorSet.ncycles(6), stat("cyc_2"), 3, 100_000, seed=20250810
    )
    assert abs(cyc_report.z_score) < 4


def test_mc_report_json_round_trip():
    report = monte_carlo(GeneratorSet.transpositions(6), stat("des"), 2, 1000, seed=3)
    assert McReport.from_json(report.to_json()) == report


def chi_square_critical(df, level=1e-6):
    from scipy.stats import chi2

    return chi2.isf(level, df)


@pytest.mark.parametrize("n", range(2, 7))
def test_class_sampler_uniformity(n):
    """Chi-square goodness of fit on every class, seeded, at the 1e-6 level.

    Runs on the default backend only; the backends are bit-identical (see
    test_kernels), so uniformity transfers.
    """
    trials = 100_000
    for lam in enumerate_partitions(n):
        size = class_size(lam)
        rows = kernels.sample_class_perms(n, tuple(lam), trials, seed=1234, stream=n)
        counts = Counter(tuple(int(x) for x in row) for row in rows)
        if size == 1:
            only = tuple(x - 1 for x in class_elements(lam)[0])
            assert counts == {only: trials}
            continue
        assert len(counts) == size
        expected = trials / size
        statistic = sum(
            (observed - expected) ** 2 / expected for observed in counts.values()
        )
        assert statistic < chi_square_critical(size - 1), (lam, statistic)
