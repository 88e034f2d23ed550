"""The random-walk engine.

A generator set is a union of conjugacy classes. Products of t uniform
elements define a walk on the symmetric group; the number of t-tuples
multiplying to a given permutation is a class function whose character
coefficients have a closed form (a power of a weighted character sum,
divided by n! and a power of the dimension). Combining those coefficients
with a mean-statistic decomposition gives the exact expected value of any
built-in statistic after t steps, as a single finite sum of rationals.

Everything here is exact; floats appear only when rendering results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .characters import character, dimension
from .errors import BadK, BadN, Error
from .partitions import Partition, class_size, enumerate_partitions, partition_stats
from .perms import StatisticId
from .meanstats import decompose, mean_value

__all__ = [
    "GeneratorSet",
    "WalkCoefficients",
    "ExpectationResult",
    "walk_coefficients",
    "expectation",
    "closed_form_transpositions",
    "expected_k_cycles_ncycle_walk",
    "count_products",
    "walk_distribution",
    "distribution_to_json",
    "distribution_from_json",
]

SHORTCUTS = ("transpositions", "ncycles", "one-fixed-point")


@dataclass(frozen=True)
class GeneratorSet:
    """A union of conjugacy classes, given by distinct cycle types.

    The optional name is only an echo for output (it records which shortcut
    produced the set) and does not take part in equality.
    """

    n: int
    types: tuple[Partition, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.types:
            raise BadN("a generator set needs at least one class")
        types = tuple(Partition(t) for t in self.types)
        object.__setattr__(self, "types", types)
        if len(set(types)) != len(types):
            raise ValueError("cycle types must be distinct")
        for t in types:
            if t.n != self.n:
                raise ValueError(f"{t} is not a partition of {self.n}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(class_size(t) for t in self.types)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def text(self) -> str:
        return self.name if self.name else ";".join(str(t) for t in self.types)

    @classmethod
    def transpositions(cls, n: int) -> "GeneratorSet":
        if n < 2:
            raise BadN("transpositions need n >= 2")
        return cls(n, (Partition((2,) + (1,) * (n - 2)),), name="transpositions")

    @classmethod
    def ncycles(cls, n: int) -> "GeneratorSet":
        return cls(n, (Partition((n,)),), name="ncycles")

    @classmethod
    def one_fixed_point(cls, n: int) -> "GeneratorSet":
        """All classes whose permutations have exactly one fixed point."""
        types = tuple(
            lam for lam in enumerate_partitions(n) if partition_stats(lam).p == 1
        )
        if not types:
            raise BadN(f"no class of S_{n} has exactly one fixed point")
        return cls(n, types, name="one-fixed-point")

    @classmethod
    def from_text(cls, n: int, text: str) -> "GeneratorSet":
        """Either a named shortcut or a semicolon-separated list of types."""
        text = text.strip()
        if text == "transpositions":
            return cls.transpositions(n)
        if text == "ncycles":
            return cls.ncycles(n)
        if text == "one-fixed-point":
            return cls.one_fixed_point(n)
        types = tuple(Partition.from_text(tok) for tok in text.split(";"))
        return cls(n, types)


@dataclass(frozen=True)
class WalkCoefficients:
    """Character coefficients of the t-step product-count class function."""

    n: int
    t: int
    coeffs: dict[Partition, Fraction]


@dataclass(frozen=True)
class ExpectationResult:
    """Exact expectation with its query echo; the float is a rendering."""

    n: int
    gamma: GeneratorSet
    stat: StatisticId
    t: int
    exact: Fraction

    @property
    def as_float(self) -> float:
        return float(self.exact)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "gamma": self.gamma.text,
                "stat": str(self.stat),
                "t": self.t,
                "exact": str(self.exact),
                "float": self.as_float,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ExpectationResult":
        data = json.loads(text)
        n = int(data["n"])
        return cls(
            n=n,
            gamma=GeneratorSet.from_text(n, data["gamma"]),
            stat=StatisticId.parse(data["stat"]),
            t=int(data["t"]),
            exact=Fraction(data["exact"]),
        )


def _weighted_char_sum(gamma: GeneratorSet, lam: Partition) -> int:
    return sum(
        size * character(lam, mu) for size, mu in zip(gamma.sizes, gamma.types)
    )


def _coefficient(gamma: GeneratorSet, lam: Partition, t: int) -> Fraction:
    # dim * S**t / (n! * dim**t); at t = 0 the empty product makes this
    # dim/n! for every generator set (0**0 == 1 by convention here).
    s = _weighted_char_sum(gamma, lam)
    dim = dimension(lam)
    return Fraction(dim * s**t, factorial(gamma.n) * dim**t)


def walk_coefficients(gamma: GeneratorSet, t: int) -> WalkCoefficients:
    """The full coefficient table of the t-step product-count function."""
    if t < 0:
        raise Error("t must be >= 0")
    coeffs = {
        lam: _coefficient(gamma, lam, t) for lam in enumerate_partitions(gamma.n)
    }
    return WalkCoefficients(gamma.n, t, coeffs)


def expectation(gamma: GeneratorSet, stat: StatisticId, t: int) -> ExpectationResult:
    """Exact expected statistic value on a product of t uniform generators.

    Orthonormality of the characters collapses the class inner product to a
    dot product of coefficient tables, and the mean-statistic side is
    sparse, so only a handful of walk coefficients are ever needed. All
    coefficients are rational, so complex conjugation in the inner product
    is vacuous.
    """
    if t < 0:
        raise Error("t must be >= 0")
    n = gamma.n
    decomp = decompose(stat, n)
    dot = sum(
        (a * _coefficient(gamma, lam, t) for lam, a in decomp.coeffs.items()),
        Fraction(0),
    )
    exact = Fraction(factorial(n), gamma.total**t) * dot
    if t == 0:
        assert exact == mean_value(stat, Partition((1,) * n))
    return ExpectationResult(n=n, gamma=gamma, stat=stat, t=t, exact=exact)


def closed_form_transpositions(stat: StatisticId, n: int, t: int) -> Fraction:
    """Printed closed forms for the transposition walk, n >= 3.

    This is an independent code path from `expectation`; the two must agree
    exactly and the test suite checks that they do.
    """
    if n < 3:
        raise BadN("the transposition-walk closed forms need n >= 3")
    if t < 0:
        raise Error("t must be >= 0")
    x = (1 - Fraction(2, n - 1)) ** t
    y = (1 - Fraction(4, n - 1)) ** t
    if stat.kind == "exc":
        return Fraction(n - 1, 2) * (1 - x)
    if stat.kind == "wexc":
        return Fraction(n + 1, 2) * (1 + Fraction(n - 1, n + 1) * x)
    if stat.kind == "des":
        return Fraction(n - 1, 2) * (1 - Fraction(2, n) * x - Fraction(n - 2, n) * y)
    if stat.kind == "maj":
        return Fraction(n * (n - 1), 4) * (
            1 - Fraction(2, n) * x - Fraction(n - 2, n) * y
        )
    if stat.kind == "inv":
        return Fraction(n * (n - 1), 4) * (
            1 - Fraction(2 * (n + 1), 3 * n) * x - Fraction(n - 2, 3 * n) * y
        )
    raise Error(f"no transposition-walk closed form for {stat}")


def expected_k_cycles_ncycle_walk(n: int, k: int, t: int) -> Fraction:
    """Expected number of k-cycles in a product of t uniform n-cycles.

    Defined for 1 <= k < n and t >= 1; equals the cyc_k expectation divided
    by k, and is exactly 0 at t = 1 (one n-cycle contains no shorter cycle).
    """
    if not 1 <= k < n:
        raise BadK(f"need 1 <= k < n, got k = {k}, n = {n}")
    if t < 1:
        raise Error("t must be >= 1")
    sign = (-1) ** (k * (t + 1) - 1)
    return Fraction(1, k) + Fraction(sign, k * comb(n - 1, k) ** (t - 1))


def count_products(gamma: GeneratorSet, t: int, target: Partition) -> int:
    """Number of t-tuples of generators multiplying to one FIXED permutation
    of the target type. Always a nonnegative integer (asserted)."""
    target = Partition(target)
    if target.n != gamma.n:
        raise BadN(f"{target} is not a partition of {gamma.n}")
    if t < 0:
        raise Error("t must be >= 0")
    total = sum(
        (
            _coefficient(gamma, lam, t) * character(lam, target)
            for lam in enumerate_partitions(gamma.n)
        ),
        Fraction(0),
    )
    assert total.denominator == 1 and total >= 0, (gamma, t, target, total)
    return int(total)


def walk_distribution(gamma: GeneratorSet, t: int) -> dict[Partition, Fraction]:
    """Exact class distribution of the product after t steps.

    Probabilities are reported for every class (zeros included); they sum
    to exactly 1.
    """
    denom = gamma.total**t
    dist = {
        nu: Fraction(class_size(nu) * count_products(gamma, t, nu), denom)
        for nu in enumerate_partitions(gamma.n)
    }
    assert sum(dist.values()) == 1
    assert all(0 <= p <= 1 for p in dist.values())
    return dist


def distribution_to_json(
    gamma: GeneratorSet, t: int, dist: dict[Partition, Fraction]
) -> str:
    return json.dumps(
        {
            "n": gamma.n,
            "gamma": gamma.text,
            "t": t,
            "probs": [
                {"class": str(nu), "value": str(dist[nu])}
                for nu in enumerate_partitions(gamma.n)
            ],
        }
    )


def distribution_from_json(text: str):
    data = json.loads(text)
    n = int(data["n"])
    gamma = GeneratorSet.from_text(n, data["gamma"])
    dist = {
        Partition.from_text(item["class"]): Fraction(item["value"])
        for item in data["probs"]
    }
    return gamma, int(data["t"]), dist
