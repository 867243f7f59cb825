"""The area-preserving bijection from a spread square back to a square."""

from __future__ import annotations

import math

from ..errors import DomainError


def spread_square_bijection(n: int, point: tuple[float, float]) -> tuple[float, float]:
    """(x, y) -> ((1 - e^{-nx}) / n, y e^{nx}).

    Sends the region under y = e^{-nx}/n, x > 0, onto the open square (0, 1/n)^2.
    """
    x, y = point
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not (x > 0 and 0 < y < math.exp(-n * x) / n):
        raise DomainError(f"({x!r}, {y!r}) is not under the curve y = exp(-{n}x)/{n}")
    return -math.expm1(-n * x) / n, y * math.exp(n * x)
