"""Independent ground-truth engines for the walk expectations.

Three routes that share no code with the character engine beyond the
permutation layer:

  * exhaustive enumeration of all |Gamma|**t generator tuples,
  * an exact dynamic program over conjugacy classes (conjugation invariance
    makes the class of the product a Markov chain), and
  * a seeded Monte Carlo sampler.

The enumeration and the DP are exact rational arithmetic; the sampler
reports a z-score against the engine's exact expectation.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .errors import BudgetExceeded, TooLarge
from .meanstats import ClassFunction, empirical_mean_statistic
from .partitions import Partition, enumerate_partitions
from .perms import Perm, StatisticId, class_elements, compose, cycle_type, evaluate
from .walks import GeneratorSet

__all__ = [
    "BRUTE_FORCE_BUDGET",
    "McReport",
    "exact_expectation_bruteforce",
    "class_transition_matrix",
    "dp_distribution",
    "dp_expectation",
    "monte_carlo",
    "representative",
]

BRUTE_FORCE_BUDGET = 10**7


def representative(lam: Partition, reverse: bool = False) -> Perm:
    """A fixed member of the class: labels written into the cycle skeleton.

    With reverse=True the labels run n..1 instead of 1..n, giving a second,
    generally different, representative of the same class.
    """
    lam = Partition(lam)
    n = lam.n
    labels = list(range(n, 0, -1)) if reverse else list(range(1, n + 1))
    images = [0] * n
    offset = 0
    for length in lam:
        block = labels[offset : offset + length]
        for idx, x in enumerate(block):
            images[x - 1] = block[(idx + 1) % length]
        offset += length
    return Perm(images)


@lru_cache(maxsize=None)
def _generator_elements(gamma: GeneratorSet) -> tuple[Perm, ...]:
    return tuple(
        pi for lam in gamma.types for pi in class_elements(lam)
    )


@lru_cache(maxsize=None)
def _product_counts(gamma: GeneratorSet, t: int) -> dict:
    gens = _generator_elements(gamma)
    rows = [[x - 1 for x in pi] for pi in gens]
    return kernels.tuple_product_counts(gamma.n, rows, t)


def exact_expectation_bruteforce(
    gamma: GeneratorSet,
    stat: StatisticId,
    t: int,
    budget: int = BRUTE_FORCE_BUDGET,
    fallback_to_dp: bool = True,
) -> Fraction:
    """Expectation by enumerating every generator tuple, n <= 7.

    When |Gamma|**t exceeds the budget the class-transition DP takes over
    (it is exact too); pass fallback_to_dp=False to get BudgetExceeded
    instead.
    """
    n = gamma.n
    if n > 7:
        raise TooLarge("brute-force enumeration is limited to n <= 7")
    if gamma.total**t > budget:
        if fallback_to_dp:
            return dp_expectation(gamma, stat, t)
        raise BudgetExceeded(
            f"|Gamma|**t = {gamma.total}**{t} exceeds the budget of {budget}"
        )
    counts = _product_counts(gamma, t)
    total = sum(
        count * evaluate(stat, Perm(tuple(x + 1 for x in images)))
        for images, count in counts.items()
    )
    return Fraction(total, gamma.total**t)


@lru_cache(maxsize=None)
def class_transition_matrix(
    gamma: GeneratorSet,
) -> dict[Partition, dict[Partition, Fraction]]:
    """M[nu][mu]: probability that one step moves class mu to class nu.

    Computed by multiplying a fixed representative of mu by every
    generator. The distribution over nu cannot depend on the representative
    (conjugating it permutes the generators within their classes), and that
    is asserted by recomputing with a second representative.
    """
    n = gamma.n
    if n > 8:
        raise TooLarge("class transition matrices are limited to n <= 8")
    order = enumerate_partitions(n)
    gens = _generator_elements(gamma)
    total = gamma.total
    matrix: dict[Partition, dict[Partition, Fraction]] = {nu: {} for nu in order}
    for mu in order:
        counts = Counter(
            cycle_type(compose(representative(mu), g)) for g in gens
        )
        recheck = Counter(
            cycle_type(compose(representative(mu, reverse=True), g)) for g in gens
        )
        assert counts == recheck, f"transition column for {mu} is rep-dependent"
        assert sum(counts.values()) == total
        for nu in order:
            matrix[nu][mu] = Fraction(counts.get(nu, 0), total)
    return matrix


def dp_distribution(gamma: GeneratorSet, t: int) -> dict[Partition, Fraction]:
    """Class distribution after t steps, by powering the transition matrix."""
    order = enumerate_partitions(gamma.n)
    matrix = class_transition_matrix(gamma)
    identity_type = Partition((1,) * gamma.n)
    dist = {nu: Fraction(int(nu == identity_type)) for nu in order}
    for _ in range(t):
        dist = {
            nu: sum((matrix[nu][mu] * dist[mu] for mu in order), Fraction(0))
            for nu in order
        }
    assert sum(dist.values()) == 1
    return dist


def dp_expectation(
    gamma: GeneratorSet,
    stat: StatisticId,
    t: int,
    class_means: ClassFunction | None = None,
) -> Fraction:
    """Expectation via the class DP and enumerated per-class means.

    The default per-class means come from `empirical_mean_statistic`, so
    this route is independent of both the character engine and the
    closed-form mean values.
    """
    means = class_means or empirical_mean_statistic(stat, gamma.n)
    dist = dp_distribution(gamma, t)
    return sum((prob * means(nu) for nu, prob in dist.items()), Fraction(0))


@dataclass(frozen=True)
class McReport:
    """Outcome of one seeded Monte Carlo run against the exact engine."""

    trials: int
    seed: int
    stream: int
    rng: str
    sample_mean: float
    sample_stddev: float
    reference_exact: Fraction
    z_score: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "trials": self.trials,
                "seed": self.seed,
                "stream": self.stream,
                "rng": self.rng,
                "mean": self.sample_mean,
                "stddev": self.sample_stddev,
                "reference": str(self.reference_exact),
                "z": self.z_score,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "McReport":
        data = json.loads(text)
        return cls(
            trials=int(data["trials"]),
            seed=int(data["seed"]),
            stream=int(data["stream"]),
            rng=data["rng"],
            sample_mean=float(data["mean"]),
            sample_stddev=float(data["stddev"]),
            reference_exact=Fraction(data["reference"]),
            z_score=float(data["z"]),
        )


def monte_carlo(
    gamma: GeneratorSet,
    stat: StatisticId,
    t: int,
    trials: int,
    seed: int,
    stream: int = 0,
) -> McReport:
    """Sample t-step products and compare the statistic's mean to exact.

    Deterministic given (seed, stream); the z-score uses the sample
    standard deviation (ddof 1) over sqrt(trials) as standard error.
    """
    from .walks import expectation  # local import keeps module layering flat

    products = kernels.walk_products(
        gamma.n,
        tuple(tuple(lam) for lam in gamma.types),
        gamma.sizes,
        t,
        trials,
        seed,
        stream,
    )
    values = kernels.stat_values(products, stat)
    reference = expectation(gamma, stat, t).exact
    mean = float(values.mean())
    stddev = float(values.std(ddof=1)) if trials > 1 else 0.0
    if stddev > 0:
        z = (mean - float(reference)) / (stddev / math.sqrt(trials))
    else:
        z = 0.0 if Fraction(mean) == reference else math.inf
    return McReport(
        trials=trials,
        seed=seed,
        stream=stream,
        rng=kernels.RNG_ALGORITHM,
        sample_mean=mean,
        sample_stddev=stddev,
        reference_exact=reference,
        z_score=z,
    )
