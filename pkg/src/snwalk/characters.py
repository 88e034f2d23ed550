"""Exact irreducible character values for the symmetric group.

The central entry point is `character(lam, mu)`, the value of the
irreducible character labelled by `lam` on the conjugacy class of cycle
type `mu`. Values are computed by the Murnaghan-Nakayama recursion over
removable border strips and cached process-wide. Everything is plain
arbitrary-precision integer arithmetic; no character value is ever touched
by floating point, since downstream code raises these values to large
powers and any error would compound.

The cache behaves as an idempotent write-once map: concurrent callers may
race to compute the same entry, but both compute the same integer and
either may land in the dict, so readers never observe a wrong value.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import SizeMismatch, TooSmall
from .partitions import Partition, enumerate_partitions, removable_border_strips

__all__ = [
    "character",
    "dimension",
    "content",
    "CharTable",
    "build_table",
    "clear_cache",
]

_cache: dict[tuple[Partition, tuple[int, ...]], int] = {}


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value at a conjugacy class, chi^lam(mu).

    >>> character(Partition((2, 1)), Partition((3,)))
    -1
    """
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.n != mu.n:
        raise SizeMismatch(f"|lambda| = {lam.n} but |mu| = {mu.n}")
    return _char(lam, tuple(mu))


def _char(lam: Partition, mu: tuple[int, ...]) -> int:
    # mu is weakly decreasing; parts are consumed largest-first, which
    # prunes the strip search fastest. Suffixes of mu stay sorted, so
    # (lam, mu) is a canonical memo key.
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    cached = _cache.get(key)
    if cached is not None:
        return cached
    head, rest = mu[0], mu[1:]
    total = 0
    for smaller, height in removable_border_strips(lam, head):
        term = _char(smaller, rest)
        total += -term if height & 1 else term
    _cache[key] = total
    return total


def clear_cache() -> None:
    """Drop the process-wide memo table (mainly for benchmarks)."""
    _cache.clear()


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation labelled by lam.

    Equals the character value on the identity class and the number of
    standard Young tableaux of shape lam.
    """
    lam = Partition(lam)
    dim = _char(lam, (1,) * lam.n)
    assert dim >= 1
    return dim


def content(lam: Partition) -> int:
    """Content of lam: binom(n, 2) * chi^lam((2, 1^(n-2))) / dim(lam).

    Always an integer; it also equals the sum of (column - row) over the
    cells of the diagram, and both routes are computed and compared on
    every call as a self-check.
    """
    lam = Partition(lam)
    n = lam.n
    if n < 2:
        raise TooSmall(f"content needs n >= 2, got n = {n}")
    mu = Partition((2,) + (1,) * (n - 2))
    value = Fraction(comb(n, 2) * character(lam, mu), dimension(lam))
    cell_sum = sum(
        row_len * (row_len - 1) // 2 - i * row_len for i, row_len in enumerate(lam)
    )
    assert value == cell_sum, f"content mismatch for {lam}: {value} != {cell_sum}"
    return cell_sum


@dataclass
class CharTable:
    """Full character table for one symmetric group.

    Rows are indexed by the character label, columns by the class type;
    both run over `enumerate_partitions(n)` in canonical order.
    """

    n: int
    order: list[Partition]
    rows: dict[Partition, dict[Partition, int]]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.rows[Partition(lam)][Partition(mu)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["lambda"] + [str(mu) for mu in self.order])
        for lam in self.order:
            writer.writerow([str(lam)] + [self.rows[lam][mu] for mu in self.order])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "order": [str(p) for p in self.order],
                "rows": {
                    str(lam): {str(mu): v for mu, v in row.items()}
                    for lam, row in self.rows.items()
                },
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CharTable":
        data = json.loads(text)
        order = [Partition.from_text(s) for s in data["order"]]
        rows = {
            Partition.from_text(lam): {
                Partition.from_text(mu): int(v) for mu, v in row.items()
            }
            for lam, row in data["rows"].items()
        }
        return cls(n=int(data["n"]), order=order, rows=rows)


def build_table(n: int) -> CharTable:
    """Compute the full character table for S_n."""
    if n < 1:
        raise TooSmall("character tables start at n = 1")
    if n > 20:
        warnings.warn(
            f"building a character table for n = {n}: the table has p(n)^2 "
            "entries and may take a long time",
            stacklevel=2,
        )
    order = enumerate_partitions(n)
    rows = {lam: {mu: character(lam, mu) for mu in order} for lam in order}
    assert all(v == 1 for v in rows[order[0]].values())  # trivial character
    return CharTable(n=n, order=order, rows=rows)
