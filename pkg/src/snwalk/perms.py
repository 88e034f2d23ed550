"""Permutations in one-line notation, and the statistics evaluated on them.

This is the ground-truth layer: every oracle in the package ultimately
reduces to `evaluate` on explicit permutations. A permutation is the tuple
of images (pi(1), ..., pi(n)); cycle notation is accepted only at the
parsing boundary.

The composition convention is function application, fixed project-wide:
compose(a, b)(i) = a(b(i)). Class-level results do not depend on it, but
oracle tests on explicit products do, so it must never drift.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import BadK, SizeMismatch
from .partitions import Partition

__all__ = [
    "Perm",
    "StatisticId",
    "STAT_KINDS",
    "builtin_statistics",
    "evaluate",
    "cycle_type",
    "compose",
    "iter_perms",
    "class_elements",
]


class Perm(tuple):
    """One-line notation: the images (pi(1), ..., pi(n)), 1-based.

    >>> Perm((3, 1, 2))(1)
    3
    >>> print(Perm((3, 1, 2)))
    3,1,2
    """

    __slots__ = ()

    def __new__(cls, images):
        self = super().__new__(cls, images)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "Perm":
        """Parse one-line "3,1,2" or cycle sugar "(1 3 2)(4 5)".

        Cycle entries may be separated by spaces or commas; points not
        mentioned are fixed. For cycle input, n defaults to the largest
        point mentioned.
        """
        text = text.strip()
        if text.startswith("("):
            cycles = [
                [int(tok) for tok in re.split(r"[,\s]+", group.strip()) if tok]
                for group in re.findall(r"\(([^()]*)\)", text)
            ]
            points = [x for cyc in cycles for x in cyc]
            if len(points) != len(set(points)):
                raise ValueError(f"cycles are not disjoint in {text!r}")
            size = n if n is not None else max(points, default=1)
            images = list(range(1, size + 1))
            for cyc in cycles:
                for idx, x in enumerate(cyc):
                    images[x - 1] = cyc[(idx + 1) % len(cyc)]
            return cls(images)
        images = [int(tok) for tok in text.split(",")]
        if n is not None and len(images) != n:
            raise SizeMismatch(f"expected a permutation of 1..{n}, got {text!r}")
        return cls(images)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"Perm({tuple(self)!r})"


def compose(a: Perm, b: Perm) -> Perm:
    """Product a*b acting as a(b(i))."""
    if len(a) != len(b):
        raise SizeMismatch(f"cannot compose sizes {len(a)} and {len(b)}")
    return Perm(tuple(a[j - 1] for j in b))


def cycle_type(pi: Perm) -> Partition:
    """Multiset of disjoint-cycle lengths, weakly decreasing."""
    n = len(pi)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = pi[pos] - 1
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return Partition(tuple(lengths))


def iter_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic one-line order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Perm(images)


def class_elements(lam: Partition) -> list[Perm]:
    """Every permutation of cycle type lam, in lexicographic order."""
    lam = Partition(lam)
    return [pi for pi in iter_perms(lam.n) if cycle_type(pi) == lam]


STAT_KINDS = ("exc", "wexc", "des", "maj", "inv", "cyc")


@dataclass(frozen=True)
class StatisticId:
    """Identifier for a built-in statistic; cyc carries its cycle length k."""

    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in STAT_KINDS:
            raise ValueError(f"unknown statistic kind {self.kind!r}")
        if (self.kind == "cyc") != (self.k is not None):
            raise ValueError("k must be given exactly when kind is cyc")
        if self.k is not None and self.k < 1:
            raise BadK(f"k must be >= 1, got {self.k}")

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> "StatisticId":
        """Parse "exc", ..., "cyc_3", or "cyc" with an explicit k."""
        text = text.strip()
        if text.startswith("cyc"):
            if "_" in text:
                return cls("cyc", int(text.split("_", 1)[1]))
            return cls("cyc", k)
        return cls(text)

    def __str__(self) -> str:
        return f"cyc_{self.k}" if self.kind == "cyc" else self.kind


def builtin_statistics(n: int) -> list[StatisticId]:
    """The five fixed statistics plus cyc_k for every 1 <= k <= n."""
    stats = [StatisticId(kind) for kind in ("exc", "wexc", "des", "maj", "inv")]
    stats.extend(StatisticId("cyc", k) for k in range(1, n + 1))
    return stats


def _exc(pi: Perm) -> int:
    return sum(1 for i, x in enumerate(pi, start=1) if x > i)


def _wexc(pi: Perm) -> int:
    return sum(1 for i, x in enumerate(pi, start=1) if x >= i)


def _des(pi: Perm) -> int:
    return sum(1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1])


def _maj(pi: Perm) -> int:
    return sum(i + 1 for i in range(len(pi) - 1) if pi[i] > pi[i + 1])


def _inv(pi: Perm) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def _cyc(pi: Perm, k: int) -> int:
    # number of ELEMENTS lying in k-cycles, i.e. k times the k-cycle count
    return sum(part for part in cycle_type(pi) if part == k)


def evaluate(stat: StatisticId, pi: Perm) -> int:
    """The value of a statistic on one explicit permutation."""
    if stat.kind == "cyc":
        if stat.k is None or not 1 <= stat.k <= len(pi):
            raise BadK(f"cyc_{stat.k} is not defined on S_{len(pi)}")
        return _cyc(pi, stat.k)
    return {"exc": _exc, "wexc": _wexc, "des": _des, "maj": _maj, "inv": _inv}[
        stat.kind
    ](pi)
