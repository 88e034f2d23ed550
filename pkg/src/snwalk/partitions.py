"""Integer partitions, conjugacy-class sizes and border-strip geometry.

A partition is stored as a weakly decreasing tuple of positive integers; it
simultaneously labels a conjugacy class of the symmetric group (by cycle
type) and an irreducible character. The empty partition stands for n = 0 and
is legal internally because the character recursion terminates there, but
parsing and printing only ever deal with n >= 1.

The text format is comma separated parts, e.g. "3,1,1". Exponent sugar such
as "3,1^2" is accepted on input and never emitted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial

__all__ = [
    "Partition",
    "PartitionStats",
    "partition_stats",
    "enumerate_partitions",
    "z_order",
    "class_size",
    "removable_border_strips",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition((3, 1, 1)).n
    5
    >>> print(Partition((3, 1, 1)))
    3,1,1
    >>> Partition.from_text("3,1^2")
    Partition((3, 1, 1))
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        self = super().__new__(cls, parts)
        prev = None
        for part in self:
            if not isinstance(part, int) or part < 1:
                raise ValueError(f"parts must be positive integers: {tuple(self)}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be weakly decreasing: {tuple(self)}")
            prev = part
        return self

    @property
    def n(self) -> int:
        return sum(self)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        parts: list[int] = []
        for token in text.split(","):
            token = token.strip()
            if not token:
                raise ValueError(f"empty part in partition text {text!r}")
            if "^" in token:
                base, _, exponent = token.partition("^")
                parts.extend([int(base)] * int(exponent))
            else:
                parts.append(int(token))
        return cls(tuple(parts))

    def __str__(self) -> str:
        return ",".join(str(part) for part in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class PartitionStats:
    """Part multiplicities, with the 1- and 2-part counts broken out.

    These two counts drive most of the closed forms for mean statistics:
    p is the number of fixed points of any permutation in the class.
    """

    p: int
    q: int
    part_multiplicities: tuple[tuple[int, int], ...]

    def multiplicity(self, size: int) -> int:
        return dict(self.part_multiplicities).get(size, 0)


def partition_stats(lam: Partition) -> PartitionStats:
    counts = Counter(lam)
    return PartitionStats(
        p=counts.get(1, 0),
        q=counts.get(2, 0),
        part_multiplicities=tuple(sorted(counts.items())),
    )


@cache
def _partitions_of(n: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(()),)
    out = []
    current = (n,)
    while True:
        out.append(Partition(current))
        # Find the rightmost part that can still be decremented, then
        # redistribute everything after it greedily.
        i = len(current) - 1
        while i >= 0 and current[i] == 1:
            i -= 1
        if i < 0:
            return tuple(out)
        rest = len(current) - i
        head = current[:i] + (current[i] - 1,)
        remaining = rest
        while remaining > 0:
            nxt = min(head[-1], remaining)
            head += (nxt,)
            remaining -= nxt
        current = head


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first.

    The order is part of the contract: every table in the package is indexed
    by it.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_of(n))


def z_order(lam: Partition) -> int:
    """Centralizer order of the class: product of k^m_k * m_k! over parts.

    >>> z_order(Partition((2, 1)))
    2
    """
    out = 1
    for size, mult in Counter(lam).items():
        out *= size**mult * factorial(mult)
    return out


def class_size(lam: Partition) -> int:
    """Number of permutations whose cycle type is lam."""
    size, rem = divmod(factorial(sum(lam)), z_order(lam))
    assert rem == 0
    return size


def removable_border_strips(
    lam: Partition, size: int
) -> list[tuple[Partition, int]]:
    """All ways of removing a border strip of exactly `size` cells from lam.

    A border strip is an edge-connected skew shape with no 2x2 block; its
    height is one less than the number of rows it spans. Returns
    (remaining shape, height) pairs ordered by the strip's top row, empty if
    no strip of that size can be removed.

    Works on the first-column hook lengths (beta numbers): removing a strip
    of length `size` subtracts `size` from one beta number, provided the
    result stays distinct from the others; the height is the number of beta
    numbers jumped over.
    """
    if size < 1:
        raise ValueError("strip size must be >= 1")
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    results = []
    for i, b in enumerate(beta):
        target = b - size
        if target < 0 or target in beta_set:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if c == b else c for c in beta), reverse=True)
        parts = tuple(
            new_beta[j] - (length - 1 - j)
            for j in range(length)
            if new_beta[j] - (length - 1 - j) > 0
        )
        results.append((Partition(parts), height))
    return results
