"""Partial sums, remainder bounds and piles of spread squares."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import BoundViolation, DomainError, NotContained
from ..regions import amoeba_boundary_height


@dataclass(frozen=True)
class SeriesPartial:
    n_terms: int
    partial_sum: float
    remainder_bound: float

    def __post_init__(self) -> None:
        if self.n_terms < 1:
            raise ValueError("n_terms must be positive")
        if not self.remainder_bound >= 0:
            raise ValueError("remainder_bound must be non-negative")


def _log_series_cumsum(t: float, n_terms: int) -> np.ndarray:
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    return np.cumsum(t ** n / n)


def log_series_partial(t: float, n_terms: int) -> SeriesPartial:
    """t + t^2/2 + ... + t^N/N with the tail bound -t^N log(1 - t)."""
    if not 0 < t < 1:
        raise DomainError(f"t must lie in (0, 1), got {t!r}")
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    partial = math.fsum((t ** n / n).tolist())
    return SeriesPartial(n_terms, partial, -(t ** n_terms) * math.log1p(-t))


def pile_height(x: float, n_terms: int) -> float:
    """Top of the pile of the first N spread squares above x."""
    if not x > 0:
        raise DomainError(f"pile height needs x > 0, got {x!r}")
    return log_series_partial(math.exp(-x), n_terms).partial_sum


def pile_covering_index(a: float, b: float, c: float) -> int:
    """Smallest N whose pile contains the box [a, b] x [0, c].

    Every pile is decreasing in x, so its minimum over the box is at x = b.
    The remainder bound caps the search: once t^N * h(b) < h(b) - c with
    t = exp(-b), the pile at b is above c.
    """
    if not (0 < a <= b and c > 0):
        raise NotContained(f"box [{a!r}, {b!r}] x [0, {c!r}] is not a box in the first quadrant")
    height = amoeba_boundary_height(b)
    if not c < height:
        raise NotContained(f"box top {c!r} is not below the boundary height {height!r} at x = {b!r}")
    t = math.exp(-b)
    clearance = (height - c) / height
    n_cap = max(1, math.ceil(math.log(clearance) / math.log(t)) + 1)
    partials = _log_series_cumsum(t, n_cap)
    above = np.nonzero(partials > c)[0]
    if above.size == 0:
        # the cap is a bound in exact arithmetic; extend in case rounding ate the last step
        n_cap *= 2
        partials = _log_series_cumsum(t, n_cap)
        above = np.nonzero(partials > c)[0]
        if above.size == 0:
            raise NotContained("no finite pile separates the box from the boundary at double precision")
    return int(above[0]) + 1


def zeta2_partial(n_terms: int) -> SeriesPartial:
    """1 + 1/4 + ... + 1/N^2; the tail is below the integral of 1/x^2 over (N, inf)."""
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    return SeriesPartial(n_terms, math.fsum((1.0 / (n * n)).tolist()), 1.0 / n_terms)


def zeta2_partials(n_max: int) -> np.ndarray:
    """All partial sums up to n_max; entry k holds the sum of k + 1 terms."""
    n = np.arange(1, n_max + 1, dtype=np.float64)
    return np.cumsum(1.0 / (n * n))


def harmonic_partial(n_terms: int) -> float:
    """1 + 1/2 + ... + 1/N, checked against the lower bound log(1 + N)."""
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    total = math.fsum((1.0 / np.arange(1, n_terms + 1, dtype=np.float64)).tolist())
    if not total > math.log1p(n_terms):
        raise BoundViolation(f"H_{n_terms} = {total!r} is not above log(1 + N)")
    return total


def harmonic_partials(n_max: int) -> np.ndarray:
    return np.cumsum(1.0 / np.arange(1, n_max + 1, dtype=np.float64))


def dyadic_grouping_lower_bound(k: int) -> float:
    """1 + k/2, the grouped lower bound for the first 2^k harmonic terms.

    At k = 1 the bound is attained (H_2 = 3/2); from k = 2 it is strict.
    """
    if k < 1:
        raise ValueError("k must be positive")
    bound = 1.0 + k / 2.0
    total = harmonic_partial(2 ** k)
    ok = total >= bound if k == 1 else total > bound
    if not ok:
        raise BoundViolation(f"H_{2 ** k} = {total!r} is not above {bound!r}")
    return bound
