"""The exact tail of U0 beyond a vertical line x = L."""

from __future__ import annotations

import math

TERM_CUTOFF = 1e-16


def tail_area(L: float) -> tuple[float, float]:
    """Area of U0 to the right of x = L, and a bound on the truncation error.

    Integrating the pile of spread squares term by term gives
    sum_{n>=1} exp(-n L) / n**2; terms are added until one drops below 1e-16.
    """
    if not L > 0:
        raise ValueError("L must be positive")
    q = math.exp(-L)
    terms = []
    n = 1
    qn = q
    while True:
        term = qn / (n * n)
        terms.append(term)
        if term < TERM_CUTOFF:
            break
        n += 1
        qn *= q
    # remaining terms are dominated by a geometric series in q
    rest = qn * q / ((n + 1) ** 2 * (1.0 - q))
    return math.fsum(terms), rest


def tail_bound(L: float) -> float:
    """Crude bound exp(-L) / (1 - exp(-L)) on the same tail."""
    q = math.exp(-L)
    return q / (1.0 - q)
