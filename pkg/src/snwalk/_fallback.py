"""Numpy implementation of the sampling and enumeration hot loops.

This module and the compiled `_speedups` extension implement the same
contract bit for bit; `snwalk.kernels` picks one at import time. The random
source is splitmix64 used in counter mode:

    mix(z)        = splitmix64 finalizer (xor-shift-multiply chain)
    key(seed, s)  = mix(seed + (s+1)*GOLDEN)   -- output s of splitmix64(seed)
    raw(key, c)   = mix(key + (c+1)*GOLDEN)    -- output c of splitmix64(key)
    bounded(r, k) = floor(r * k / 2**64)       -- one draw per bounded value

Streams are therefore independent sub-generators addressed by (seed,
stream), and every trial owns a fixed counter window, so results do not
depend on evaluation order and the two backends agree exactly. The
multiply-shift bound has bias at most k/2**64, far below anything a 1e5
sample statistical test can see.

Draw layout per trial (size n, t steps):
    walk_products       t*n draws: per step, 1 class pick + n-1 shuffle draws
    sample_class_perms  n-1 shuffle draws

A uniform permutation of a given cycle type is produced by shuffling the
labels 0..n-1 and writing them into a fixed cycle skeleton (consecutive
blocks sized by the parts, each block mapped cyclically); every permutation
of the class has exactly z_order(type) preimages under this fill, so the
output is uniform on the class.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"

MASK64 = (1 << 64) - 1
_GOLDEN_INT = 0x9E3779B97F4A7C15
_MIX1_INT = 0xBF58476D1CE4E5B9
_MIX2_INT = 0x94D049BB133111EB

U64 = np.uint64
GOLDEN = U64(_GOLDEN_INT)
MIX1 = U64(_MIX1_INT)
MIX2 = U64(_MIX2_INT)
S27, S30, S31, S32 = U64(27), U64(30), U64(31), U64(32)
LOW32 = U64(0xFFFFFFFF)

EXC, WEXC, DES, MAJ, INV, CYC = range(6)


def _mix_int(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1_INT) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2_INT) & MASK64
    return z ^ (z >> 31)


def stream_key(seed: int, stream: int) -> int:
    return _mix_int(seed + (stream + 1) * _GOLDEN_INT)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> S30)) * MIX1
    z = (z ^ (z >> S27)) * MIX2
    return z ^ (z >> S31)


def _raw(key: int, counters: np.ndarray) -> np.ndarray:
    return _mix((counters + U64(1)) * GOLDEN + U64(key))


def _bounded(raws: np.ndarray, k: int) -> np.ndarray:
    # floor(r*k / 2^64) for k < 2^32, split to stay inside uint64
    hi = raws >> S32
    lo = raws & LOW32
    return (hi * U64(k) + ((lo * U64(k)) >> S32)) >> S32


def rng_raw(seed: int, stream: int, count: int) -> np.ndarray:
    """First `count` raw 64-bit outputs of the (seed, stream) sub-generator."""
    key = stream_key(seed, stream)
    return _raw(key, np.arange(count, dtype=np.uint64))


def _shuffled_labels(key: int, base: np.ndarray, n: int) -> np.ndarray:
    """Fisher-Yates across rows; row r consumes counters base[r]..base[r]+n-2."""
    trials = len(base)
    w = np.tile(np.arange(n, dtype=np.int64), (trials, 1))
    rows = np.arange(trials)
    for m in range(n - 1, 0, -1):
        c = base + U64(n - 1 - m)
        j = _bounded(_raw(key, c), m + 1).astype(np.int64)
        col_m = w[:, m].copy()
        w[:, m] = w[rows, j]
        w[rows, j] = col_m
    return w


def _fill_skeleton(w: np.ndarray, parts) -> np.ndarray:
    """Map shuffled labels through the cycle skeleton of one class."""
    g = np.empty_like(w)
    rows = np.arange(w.shape[0])[:, None]
    offset = 0
    for length in parts:
        block = w[:, offset : offset + length]
        g[rows, block] = np.roll(block, -1, axis=1)
        offset += length
    return g


def sample_class_perms(
    n: int, parts: tuple[int, ...], trials: int, seed: int, stream: int
) -> np.ndarray:
    """Uniform samples from one conjugacy class, 0-based one-line rows."""
    key = stream_key(seed, stream)
    base = np.arange(trials, dtype=np.uint64) * U64(max(n - 1, 1))
    w = _shuffled_labels(key, base, n)
    return _fill_skeleton(w, parts).astype(np.int32)


def walk_products(
    n: int,
    parts_flat: np.ndarray,
    parts_start: np.ndarray,
    cum_sizes: np.ndarray,
    t: int,
    trials: int,
    seed: int,
    stream: int,
) -> np.ndarray:
    """Products of t independent uniform generators, one 0-based row per trial."""
    key = stream_key(seed, stream)
    num_classes = len(cum_sizes)
    total = int(cum_sizes[-1])
    prod = np.tile(np.arange(n, dtype=np.int64), (trials, 1))
    trial_base = np.arange(trials, dtype=np.uint64) * U64(t * n)
    for step in range(t):
        c0 = trial_base + U64(step * n)
        u = _bounded(_raw(key, c0), total)
        cls = np.searchsorted(cum_sizes, u, side="right")
        w = _shuffled_labels(key, c0 + U64(1), n)
        gamma = np.empty_like(w)
        for ci in range(num_classes):
            mask = cls == ci
            if not mask.any():
                continue
            parts = tuple(
                int(parts_flat[idx])
                for idx in range(int(parts_start[ci]), int(parts_start[ci + 1]))
            )
            gamma[mask] = _fill_skeleton(w[mask], parts)
        # apply the new step first: prod <- prod o gamma
        prod = np.take_along_axis(prod, gamma, axis=1)
    return prod.astype(np.int32)


def stat_values(perms: np.ndarray, code: int, k: int = 0) -> np.ndarray:
    """Evaluate one statistic on a batch of 0-based one-line rows."""
    p = np.asarray(perms, dtype=np.int64)
    m, n = p.shape
    if code == EXC:
        return (p > np.arange(n)).sum(axis=1)
    if code == WEXC:
        return (p >= np.arange(n)).sum(axis=1)
    if code == DES:
        return (p[:, :-1] > p[:, 1:]).sum(axis=1)
    if code == MAJ:
        return (p[:, :-1] > p[:, 1:]) @ np.arange(1, n, dtype=np.int64)
    if code == INV:
        upper = np.triu(np.ones((n, n), dtype=bool), k=1)
        return (p[:, :, None] > p[:, None, :])[:, upper].sum(axis=1)
    assert code == CYC
    period = np.zeros((m, n), dtype=np.int64)
    current = p.copy()
    idx = np.arange(n)
    for step in range(1, n + 1):
        hit = (current == idx) & (period == 0)
        period[hit] = step
        if step < n:
            current = np.take_along_axis(p, current, axis=1)
    return (period == k).sum(axis=1)


def tuple_product_counts(n: int, gens: np.ndarray, t: int) -> dict:
    """Count how often each product arises over ALL t-tuples of generators.

    Honest depth-first enumeration of the |gens|**t tuples with incremental
    prefix products; the caller enforces the work budget.
    """
    gens_t = [tuple(int(x) for x in g) for g in np.asarray(gens)]
    counts: dict[tuple, int] = {}
    identity = tuple(range(n))

    def descend(prefix, depth):
        if depth == t:
            counts[prefix] = counts.get(prefix, 0) + 1
            return
        for g in gens_t:
            descend(tuple(prefix[x] for x in g), depth + 1)

    descend(identity, 0)
    return counts
