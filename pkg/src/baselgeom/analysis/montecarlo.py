"""Rejection-sampling estimate of Area(U0)."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .. import kernels
from .quadrature import NumericEstimate
from .tails import tail_area

CHUNK = 1 << 18


def _split(total: int, parts: int) -> list[int]:
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def _count_shard(seed_seq: np.random.SeedSequence, n: int, L: float) -> int:
    rng = np.random.default_rng(seed_seq)
    hits = 0
    remaining = n
    while remaining:
        m = min(remaining, CHUNK)
        pts = rng.random((m, 2)) * L
        hits += kernels.count_below_boundary(pts[:, 0], pts[:, 1])
        remaining -= m
    return hits


def mc_area_U0(samples: int = 1_000_000, box_size: float = 20.0, seed: int = 0,
               shards: int = 1, workers: int | None = None) -> NumericEstimate:
    """Estimate Area(U0) from uniform points in [0, L]^2 plus the exact tails.

    Outside the box U0 consists of two congruent tentacles (one along each
    axis) as long as L > log 2; each has area sum exp(-n L)/n**2.

    Each shard draws from its own stream spawned from ``seed``; the result
    depends on ``(samples, box_size, seed, shards)`` only, never on
    ``workers``.  ``error_bound`` is three binomial standard errors.
    """
    L = float(box_size)
    if not L > math.log(2.0):
        raise ValueError("box_size must exceed log 2")
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    if shards < 1:
        raise ValueError("shards must be positive")
    streams = np.random.SeedSequence(seed).spawn(shards)
    sizes = _split(samples, shards)
    if workers and workers > 1 and shards > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(_count_shard, streams, sizes, [L] * shards))
    else:
        counts = [_count_shard(s, n, L) for s, n in zip(streams, sizes)]
    hits = sum(counts)
    p = hits / samples
    box_area = L * L
    tail, _ = tail_area(L)
    std_err = box_area * math.sqrt(p * (1.0 - p) / samples)
    return NumericEstimate(box_area * p + 2.0 * tail, 3.0 * std_err, samples)


def mc_area_T(samples: int = 1_000_000, seed: int = 0) -> NumericEstimate:
    """Estimate Area(T) by rejection from the square [0, pi]^2."""
    rng = np.random.default_rng(seed)
    pts = rng.random((samples, 2)) * math.pi
    hits = int(np.count_nonzero(pts.sum(axis=1) < math.pi))
    p = hits / samples
    box = math.pi * math.pi
    return NumericEstimate(box * p, 3.0 * box * math.sqrt(p * (1.0 - p) / samples), samples)
