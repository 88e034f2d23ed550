"""Backend selection for the sampling and enumeration hot loops.

Two interchangeable implementations exist: `snwalk._speedups`, a compiled
extension, and `snwalk._fallback`, written with numpy. They produce
identical outputs (same RNG, same draw layout, same arithmetic); the
compiled one is simply faster. The extension is preferred when importable;
set SNWALK_BACKEND=pure to force the fallback, or call `set_backend`.
"""

from __future__ import annotations

import os

import numpy as np

from . import _fallback
from .errors import BadK, Error
from .perms import StatisticId

try:
    from . import _speedups
except ImportError:  # extension not built; numpy fallback carries the load
    _speedups = None

RNG_ALGORITHM = "splitmix64"

_BACKENDS = {"pure": _fallback}
if _speedups is not None:
    _BACKENDS["cython"] = _speedups

_STAT_CODES = {"exc": 0, "wexc": 1, "des": 2, "maj": 3, "inv": 4, "cyc": 5}


def available_backends() -> dict:
    return dict(_BACKENDS)


def _default_backend():
    requested = os.environ.get("SNWALK_BACKEND")
    if requested:
        if requested not in _BACKENDS:
            raise Error(f"SNWALK_BACKEND={requested!r} is not available")
        return _BACKENDS[requested]
    return _BACKENDS.get("cython", _fallback)


_impl = _default_backend()


def backend_name() -> str:
    return _impl.BACKEND


def set_backend(name: str) -> None:
    """Switch backends (tests and benchmarks); not safe mid-computation."""
    global _impl
    if name not in _BACKENDS:
        raise Error(f"backend {name!r} is not available (have {sorted(_BACKENDS)})")
    _impl = _BACKENDS[name]


def _stat_code(stat: StatisticId, n: int) -> tuple[int, int]:
    if stat.kind == "cyc":
        if stat.k is None or not 1 <= stat.k <= n:
            raise BadK(f"cyc_{stat.k} is not defined on S_{n}")
        return _STAT_CODES["cyc"], stat.k
    return _STAT_CODES[stat.kind], 0


def _encode_classes(types_parts, sizes):
    parts_flat = np.array(
        [part for parts in types_parts for part in parts], dtype=np.int32
    )
    starts = [0]
    for parts in types_parts:
        starts.append(starts[-1] + len(parts))
    parts_start = np.array(starts, dtype=np.int32)
    cum = np.cumsum(np.array(sizes, dtype=object))
    if int(cum[-1]) >= 1 << 32:
        raise Error("generator set too large for the sampler (needs |Gamma| < 2^32)")
    return parts_flat, parts_start, cum.astype(np.uint64)


def walk_products(
    n: int,
    types_parts,
    sizes,
    t: int,
    trials: int,
    seed: int,
    stream: int = 0,
) -> np.ndarray:
    """Sampled t-step products as 0-based one-line rows (trials x n)."""
    if trials < 1:
        raise Error("trials must be >= 1")
    parts_flat, parts_start, cum = _encode_classes(types_parts, sizes)
    return _impl.walk_products(
        n, parts_flat, parts_start, cum, t, trials, seed & ((1 << 64) - 1), stream
    )


def sample_class_perms(
    n: int, parts, trials: int, seed: int, stream: int = 0
) -> np.ndarray:
    """Uniform samples from one conjugacy class as 0-based one-line rows."""
    if trials < 1:
        raise Error("trials must be >= 1")
    return _impl.sample_class_perms(
        n, tuple(parts), trials, seed & ((1 << 64) - 1), stream
    )


def stat_values(perms: np.ndarray, stat: StatisticId) -> np.ndarray:
    """Evaluate a statistic on a batch of 0-based one-line rows."""
    perms = np.ascontiguousarray(perms, dtype=np.int32)
    code, k = _stat_code(stat, perms.shape[1])
    return np.asarray(_impl.stat_values(perms, code, k), dtype=np.int64)


def tuple_product_counts(n: int, gens, t: int) -> dict:
    """Multiplicity of every product over all t-tuples of the generators.

    `gens` holds explicit 0-based one-line rows; returns a dict keyed by
    0-based one-line tuples. The caller is responsible for budgeting
    len(gens)**t.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int32)
    return _impl.tuple_product_counts(n, gens, t)


def rng_raw(seed: int, stream: int, count: int) -> np.ndarray:
    """Raw 64-bit RNG outputs, for tests and diagnostics."""
    return _impl.rng_raw(seed & ((1 << 64) - 1), stream, count)
