# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the sampling and enumeration hot loops.

Bit-for-bit mirror of snwalk._fallback; see that module's docstring for the
RNG contract and the per-trial draw layout. Keep the two in sync.
"""

import itertools
from math import factorial

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t

BACKEND = "cython"

cdef uint64_t GOLDEN = <uint64_t> 0x9E3779B97F4A7C15
cdef uint64_t MIX1 = <uint64_t> 0xBF58476D1CE4E5B9
cdef uint64_t MIX2 = <uint64_t> 0x94D049BB133111EB

cdef enum:
    MAX_N = 64

EXC, WEXC, DES, MAJ, INV, CYC = range(6)


cdef inline uint64_t _mix(uint64_t z) nogil:
    z = (z ^ (z >> 30)) * MIX1
    z = (z ^ (z >> 27)) * MIX2
    return z ^ (z >> 31)


cdef inline uint64_t _raw(uint64_t key, uint64_t counter) nogil:
    return _mix(key + (counter + 1) * GOLDEN)


cdef inline uint64_t _bounded(uint64_t r, uint64_t k) nogil:
    # floor(r*k / 2^64) for k < 2^32; same 32-bit split as the fallback
    cdef uint64_t hi = r >> 32
    cdef uint64_t lo = r & (<uint64_t> 0xFFFFFFFF)
    return (hi * k + ((lo * k) >> 32)) >> 32


def stream_key(seed, stream):
    return _mix(<uint64_t> seed + (<uint64_t> stream + 1) * GOLDEN)


def rng_raw(seed, stream, int count):
    cdef uint64_t key = stream_key(seed, stream)
    out = np.empty(count, dtype=np.uint64)
    cdef uint64_t[::1] view = out
    cdef int i
    for i in range(count):
        view[i] = _raw(key, i)
    return out


cdef inline void _shuffle_into(
    uint64_t key, uint64_t base, int n, int32_t* w
) nogil:
    cdef int i, m
    cdef int32_t tmp
    cdef int j
    for i in range(n):
        w[i] = i
    for m in range(n - 1, 0, -1):
        j = <int> _bounded(_raw(key, base + (n - 1 - m)), m + 1)
        tmp = w[m]
        w[m] = w[j]
        w[j] = tmp


cdef inline void _fill_skeleton_c(
    const int32_t* parts, int num_parts, const int32_t* w, int32_t* g
) nogil:
    cdef int pi, idx, offset = 0
    cdef int length
    for pi in range(num_parts):
        length = parts[pi]
        for idx in range(length):
            g[w[offset + idx]] = w[offset + (idx + 1) % length]
        offset += length


def sample_class_perms(int n, parts, int trials, seed, stream):
    assert n <= MAX_N
    cdef uint64_t key = stream_key(seed, stream)
    parts_arr = np.array(parts, dtype=np.int32)
    cdef int32_t[::1] pview = parts_arr
    out = np.empty((trials, n), dtype=np.int32)
    cdef int32_t[:, ::1] oview = out
    cdef int32_t w[MAX_N]
    cdef uint64_t spacing = n - 1 if n > 1 else 1
    cdef int r, i
    for r in range(trials):
        _shuffle_into(key, r * spacing, n, w)
        _fill_skeleton_c(&pview[0], pview.shape[0], w, &oview[r, 0])
    return out


def walk_products(
    int n,
    int32_t[::1] parts_flat,
    int32_t[::1] parts_start,
    uint64_t[::1] cum_sizes,
    int t,
    int trials,
    seed,
    stream,
):
    assert n <= MAX_N
    cdef uint64_t key = stream_key(seed, stream)
    cdef uint64_t total = cum_sizes[cum_sizes.shape[0] - 1]
    out = np.empty((trials, n), dtype=np.int32)
    cdef int32_t[:, ::1] oview = out
    cdef int32_t w[MAX_N]
    cdef int32_t g[MAX_N]
    cdef int32_t prod[MAX_N]
    cdef int32_t nxt[MAX_N]
    cdef uint64_t c0, u
    cdef int r, step, i, ci
    for r in range(trials):
        for i in range(n):
            prod[i] = i
        for step in range(t):
            c0 = (<uint64_t> r) * (t * n) + step * n
            u = _bounded(_raw(key, c0), total)
            ci = 0
            while cum_sizes[ci] <= u:
                ci += 1
            _shuffle_into(key, c0 + 1, n, w)
            _fill_skeleton_c(
                &parts_flat[parts_start[ci]],
                parts_start[ci + 1] - parts_start[ci],
                w,
                g,
            )
            for i in range(n):
                nxt[i] = prod[g[i]]
            for i in range(n):
                prod[i] = nxt[i]
        for i in range(n):
            oview[r, i] = prod[i]
    return out


cdef int64_t _stat_one(const int32_t* p, int n, int code, int k) nogil:
    cdef int64_t acc = 0
    cdef int i, j, length, pos
    cdef bint seen[MAX_N]
    if code == 0:  # exc
        for i in range(n):
            if p[i] > i:
                acc += 1
    elif code == 1:  # wexc
        for i in range(n):
            if p[i] >= i:
                acc += 1
    elif code == 2:  # des
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                acc += 1
    elif code == 3:  # maj
        for i in range(n - 1):
            if p[i] > p[i + 1]:
                acc += i + 1
    elif code == 4:  # inv
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    acc += 1
    else:  # cyc_k: elements lying in k-cycles
        for i in range(n):
            seen[i] = 0
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            pos = i
            while not seen[pos]:
                seen[pos] = 1
                pos = p[pos]
                length += 1
            if length == k:
                acc += length
    return acc


def stat_values(int32_t[:, ::1] perms, int code, int k):
    cdef int m = perms.shape[0]
    cdef int n = perms.shape[1]
    assert n <= MAX_N
    out = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] oview = out
    cdef int r
    for r in range(m):
        oview[r] = _stat_one(&perms[r, 0], n, code, k)
    return out


cdef void _descend(
    const int32_t* gens,
    int g,
    int n,
    int depth,
    int t,
    const int32_t* prefix,
    int64_t* counts,
    const int64_t* facts,
) nogil:
    cdef int32_t nxt[MAX_N]
    cdef int gi, i, j
    cdef int64_t rank
    if depth == t:
        rank = 0
        for i in range(n):
            for j in range(i + 1, n):
                if prefix[j] < prefix[i]:
                    rank += facts[n - 1 - i]
        counts[rank] += 1
        return
    for gi in range(g):
        for i in range(n):
            nxt[i] = prefix[gens[gi * n + i]]
        _descend(gens, g, n, depth + 1, t, nxt, counts, facts)


def tuple_product_counts(int n, int32_t[:, ::1] gens, int t):
    assert n <= 10 and t >= 0
    cdef int64_t nfact = factorial(n)
    counts = np.zeros(nfact, dtype=np.int64)
    cdef int64_t[::1] cview = counts
    facts = np.array([factorial(i) for i in range(n + 1)], dtype=np.int64)
    cdef int64_t[::1] fview = facts
    cdef int32_t identity[MAX_N]
    cdef int i
    for i in range(n):
        identity[i] = i
    _descend(
        &gens[0, 0], gens.shape[0], n, 0, t, identity, &cview[0], &fview[0]
    )
    out = {}
    for rank, images in enumerate(itertools.permutations(range(n))):
        if cview[rank]:
            out[images] = int(cview[rank])
    return out
