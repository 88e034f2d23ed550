"""Exact expectations of permutation statistics under conjugacy-class walks.

The package computes, in exact rational arithmetic, the expected value of a
permutation statistic (excedances, weak excedances, descents, major index,
inversions, k-cycle element counts) on a product of t permutations drawn
independently and uniformly from a union of symmetric-group conjugacy
classes. The engine works through irreducible character decompositions and
ships with independent brute-force, dynamic-programming and Monte Carlo
oracles that verify every closed form.
"""

from .errors import (
    BadIndices,
    BadK,
    BadN,
    BudgetExceeded,
    Error,
    SizeMismatch,
    TooLarge,
    TooSmall,
)
from .partitions import (
    Partition,
    PartitionStats,
    class_size,
    enumerate_partitions,
    partition_stats,
    removable_border_strips,
    z_order,
)
from .characters import CharTable, build_table, character, content, dimension
from .perms import (
    Perm,
    StatisticId,
    builtin_statistics,
    class_elements,
    compose,
    cycle_type,
    evaluate,
    iter_perms,
)
from .meanstats import (
    CharDecomposition,
    ClassFunction,
    decompose,
    empirical_mean_statistic,
    inversion_count_above,
    mean_value,
    project,
)
from .walks import (
    ExpectationResult,
    GeneratorSet,
    WalkCoefficients,
    closed_form_transpositions,
    count_products,
    expectation,
    expected_k_cycles_ncycle_walk,
    walk_coefficients,
    walk_distribution,
)
from .oracles import (
    McReport,
    class_transition_matrix,
    dp_distribution,
    dp_expectation,
    exact_expectation_bruteforce,
    monte_carlo,
)

__version__ = "0.1.0"
