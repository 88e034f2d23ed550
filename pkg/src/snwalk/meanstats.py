"""Mean statistics as class functions and their character decompositions.

Averaging a permutation statistic over each conjugacy class yields a class
function. For the built-in statistics that class function has a short exact
closed form in terms of p (number of 1-parts) and q (number of 2-parts) of
the class type, and an equally short expansion in the orthonormal basis of
irreducible characters. Both are implemented here, together with a generic
projector onto that basis and a fully independent enumeration oracle, so
every closed form can be checked against brute force.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .characters import character
from .errors import BadIndices, BadK, BadN, TooLarge
from .partitions import (
    Partition,
    class_size,
    enumerate_partitions,
    partition_stats,
)
from .perms import StatisticId, cycle_type, evaluate, iter_perms

__all__ = [
    "ClassFunction",
    "CharDecomposition",
    "mean_value",
    "inversion_count_above",
    "decompose",
    "project",
    "empirical_mean_statistic",
]

ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class ClassFunction:
    """Exact rational values on every class of one symmetric group."""

    n: int
    values: dict[Partition, Fraction]

    def __post_init__(self):
        expected = set(enumerate_partitions(self.n))
        if set(self.values) != expected:
            raise ValueError("class function must be defined on every class")

    def __call__(self, mu: Partition) -> Fraction:
        return self.values[Partition(mu)]

    @classmethod
    def tabulate(cls, n: int, fn) -> "ClassFunction":
        return cls(n, {mu: Fraction(fn(mu)) for mu in enumerate_partitions(n)})


@dataclass(frozen=True)
class CharDecomposition:
    """Sparse coefficients in the irreducible-character basis.

    Absent keys mean zero; zero coefficients are dropped on construction so
    equality is well defined.
    """

    n: int
    coeffs: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {
            Partition(lam): Fraction(c) for lam, c in self.coeffs.items() if c != 0
        }
        for lam in cleaned:
            if lam.n != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
        object.__setattr__(self, "coeffs", cleaned)

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def __call__(self, mu: Partition) -> Fraction:
        """Reconstruct the class-function value at mu."""
        return sum(
            (c * character(lam, mu) for lam, c in self.coeffs.items()),
            Fraction(0),
        )

    def to_json(self) -> str:
        ordered = sorted(self.coeffs, key=_canonical_key)
        return json.dumps(
            {
                "n": self.n,
                "coeffs": [
                    {"lambda": str(lam), "value": str(self.coeffs[lam])}
                    for lam in ordered
                ],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CharDecomposition":
        data = json.loads(text)
        return cls(
            n=int(data["n"]),
            coeffs={
                Partition.from_text(item["lambda"]): Fraction(item["value"])
                for item in data["coeffs"]
            },
        )


def _canonical_key(lam: Partition):
    return [-part for part in lam]


def mean_value(stat: StatisticId, lam: Partition) -> Fraction:
    """Closed-form class average of a built-in statistic, no enumeration.

    exc and wexc average to (n - p)/2 and (n + p)/2; des, maj and inv have
    the p,q forms below; cyc_k is already a class function equal to k times
    the multiplicity of k among the parts.
    """
    lam = Partition(lam)
    n = lam.n
    st = partition_stats(lam)
    p, q = st.p, st.q
    if stat.kind == "cyc":
        if stat.k is None or not 1 <= stat.k <= n:
            raise BadK(f"cyc_{stat.k} is not defined on S_{n}")
        return Fraction(stat.k * st.multiplicity(stat.k))
    if stat.kind == "exc":
        return Fraction(n - p, 2)
    if stat.kind == "wexc":
        return Fraction(n + p, 2)
    if stat.kind == "des":
        return Fraction(n - 1, 2) + Fraction(q, n) - Fraction(comb(p, 2), n)
    if stat.kind == "maj":
        return Fraction(n * (n - 1), 4) + Fraction(q, 2) - Fraction(comb(p, 2), 2)
    assert stat.kind == "inv"
    return (
        Fraction(n * (n - 1), 4)
        - Fraction(p * (p - 1), 12)
        - Fraction(n * (p - 1), 6)
        + Fraction(q, 6)
    )


def inversion_count_above(lam: Partition, i: int, j: int) -> int:
    """Number of permutations in the class with pi(i) > pi(j), for i < j.

    Exact closed form in p, q and j - i. The last term carries a factor
    j - i - 1, so it is taken as zero whenever j = i + 1; that also covers
    n = 2, where its denominator would vanish.
    """
    lam = Partition(lam)
    n = lam.n
    if not 1 <= i < j <= n:
        raise BadIndices(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    st = partition_stats(lam)
    p, q = st.p, st.q
    size = class_size(lam)
    total = 1 + Fraction(2 * q - p * (p - 1), n * (n - 1))
    if j - i - 1 > 0:
        total += Fraction(
            2 * (j - i - 1) * ((n - p) * (1 - p) - 2 * q), n * (n - 1) * (n - 2)
        )
    value = Fraction(size, 2) * total
    assert value.denominator == 1 and 0 <= value <= size, (lam, i, j, value)
    return int(value)


def _cycle_count_coeffs(n: int, k: int) -> dict[Partition, Fraction]:
    coeffs: dict[Partition, Fraction] = {Partition((n,)): Fraction(1)}
    for i in range(1, min(k, n - k) + 1):
        shape = Partition((n - k, i) + (1,) * (k - i))
        coeffs[shape] = Fraction((-1) ** (k - i))
    for j in range(n - k + 1, k):
        shape = Partition((j, n - k + 1) + (1,) * (k - j - 1))
        coeffs[shape] = Fraction((-1) ** (k - j))
    return coeffs


def decompose(stat: StatisticId, n: int) -> CharDecomposition:
    """Exact character coefficients of the mean statistic on S_n.

    The five order statistics only involve the shapes (n), (n-1,1) and
    (n-2,1,1); cyc_k expands over border-strip shapes with signs +-1. At
    n = 2 the shape (n-2,1,1) does not exist and the des/maj/inv
    expansions reduce to two terms, hard-coded below; they agree with
    projecting the enumerated mean statistic.
    """
    if stat.kind == "cyc":
        if stat.k is None or not 1 <= stat.k <= n:
            raise BadK(f"cyc_{stat.k} is not defined on S_{n}")
        return CharDecomposition(n, _cycle_count_coeffs(n, stat.k))
    if n < 2:
        raise BadN(f"{stat} has no decomposition for n = {n}")
    top = Partition((n,))
    hook1 = Partition((n - 1, 1))
    if stat.kind == "exc":
        return CharDecomposition(
            n, {top: Fraction(n - 1, 2), hook1: Fraction(-1, 2)}
        )
    if stat.kind == "wexc":
        return CharDecomposition(
            n, {top: Fraction(n + 1, 2), hook1: Fraction(1, 2)}
        )
    if n == 2:
        return CharDecomposition(
            2, {top: Fraction(1, 2), hook1: Fraction(-1, 2)}
        )
    hook2 = Partition((n - 2, 1, 1))
    if stat.kind == "des":
        return CharDecomposition(
            n,
            {top: Fraction(n - 1, 2), hook1: Fraction(-1, n), hook2: Fraction(-1, n)},
        )
    if stat.kind == "maj":
        return CharDecomposition(
            n,
            {
                top: Fraction(n * (n - 1), 4),
                hook1: Fraction(-1, 2),
                hook2: Fraction(-1, 2),
            },
        )
    assert stat.kind == "inv"
    return CharDecomposition(
        n,
        {
            top: Fraction(n * (n - 1), 4),
            hook1: Fraction(-(n + 1), 6),
            hook2: Fraction(-1, 6),
        },
    )


def project(f: ClassFunction) -> CharDecomposition:
    """Coefficients of f in the character basis, via the class inner product.

    a_lam = (1/n!) * sum over classes of |class| * f * chi^lam. This is the
    oracle route: it deliberately loops over every character rather than
    exploiting sparsity.
    """
    n = f.n
    nfact = factorial(n)
    classes = enumerate_partitions(n)
    sizes = {mu: class_size(mu) for mu in classes}
    coeffs = {}
    for lam in classes:
        total = sum(
            (sizes[mu] * f.values[mu] * character(lam, mu) for mu in classes),
            Fraction(0),
        )
        coeffs[lam] = total / nfact
    return CharDecomposition(n, coeffs)


@lru_cache(maxsize=None)
def empirical_mean_statistic(
    stat: StatisticId, n: int, bound: int = ENUMERATION_BOUND
) -> ClassFunction:
    """Class averages by enumerating all n! permutations.

    Completely independent of every closed form in this module; used as the
    ground truth they are verified against. Refuses n beyond the
    enumeration bound.
    """
    if n > bound:
        raise TooLarge(f"refusing to enumerate S_{n} (bound is {bound})")
    sums: dict[Partition, int] = defaultdict(int)
    counts: dict[Partition, int] = defaultdict(int)
    for pi in iter_perms(n):
        t = cycle_type(pi)
        sums[t] += evaluate(stat, pi)
        counts[t] += 1
    assert all(counts[mu] == class_size(mu) for mu in counts)
    values = {mu: Fraction(sums[mu], counts[mu]) for mu in counts}
    return ClassFunction(n, values)
