"""Adaptive Gauss-Kronrod quadrature for the improper integrals of the proof.

Two integrals are needed: the area of U0 as the integral of its boundary
height over (0, inf), and the area under each spread square exp(-n x)/n.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .. import kernels
from ..errors import ToleranceNotMet
from .tails import tail_area

# Kronrod 15-point nodes/weights and the embedded 7-point Gauss weights
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD_W = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS_W = np.zeros(15)
_GAUSS_W[[1, 3, 5]] = _WG[:3]
_GAUSS_W[[13, 11, 9]] = _WG[:3]
_GAUSS_W[7] = _WG[3]


@dataclass(frozen=True)
class NumericEstimate:
    """A value with an error estimate and the work spent computing it.

    For quadrature ``error_bound`` is the claimed absolute error; for Monte
    Carlo it is a multiple of the standard error.
    """

    value: float
    error_bound: float
    work: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.value) and math.isfinite(self.error_bound)):
            raise ValueError("NumericEstimate must be finite")
        if self.error_bound < 0:
            raise ValueError("error_bound must be non-negative")


def _gk15(f: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fx = f(mid + half * _NODES)
    kronrod = half * float(_KRONROD_W @ fx)
    gauss = half * float(_GAUSS_W @ fx)
    return kronrod, abs(kronrod - gauss)


def adaptive_integrate(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                       abs_tol: float = 0.0, rel_tol: float = 1e-10,
                       max_intervals: int = 2000) -> NumericEstimate:
    """Globally adaptive 7/15 Gauss-Kronrod integration of ``f`` over [a, b].

    ``f`` is evaluated on arrays of nodes strictly inside [a, b], so
    integrable endpoint singularities are fine.  The interval with the largest
    error estimate is bisected until the summed estimate meets
    ``max(abs_tol, rel_tol * |integral|)``.
    """
    value, err = _gk15(f, a, b)
    heap = [(-err, a, b, value)]
    total_value, total_err = value, err
    evals = 15
    while total_err > max(abs_tol, rel_tol * abs(total_value)):
        if len(heap) >= max_intervals:
            raise ToleranceNotMet(
                f"{len(heap)} intervals used, error estimate {total_err:.3g} "
                f"above requested tolerance"
            )
        neg_err, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ToleranceNotMet("interval width reached floating-point resolution")
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        evals += 30
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        # re-sum rather than update incrementally to avoid drift
        total_value = math.fsum(item[3] for item in heap)
        total_err = math.fsum(-item[0] for item in heap)
    return NumericEstimate(total_value, total_err, evals)


def integrand_U0(x):
    """Height of U0 above x: -log(1 - exp(-x))."""
    return kernels.boundary_height(x)


def _truncation_length(rel_tol: float) -> float:
    # the integral exceeds 1, so this keeps the tail below rel_tol / 100
    return -math.log(rel_tol / 100.0)


def integrate_area_U0(rel_tol: float = 1e-10, max_intervals: int = 2000) -> NumericEstimate:
    """Area of U0 as the integral of the boundary height over (0, inf).

    With t = exp(-x) the integral becomes one over (0, 1) with a bounded
    integrand near t = 0 and a logarithmic singularity at t = 1.  Quadrature
    runs in s = 1 - t so the singular endpoint sits at s = 0, where floats are
    dense.  The range is cut at x = L and the exact tail beyond it is added.
    """
    if not 0 < rel_tol < 1:
        raise ValueError("rel_tol must lie in (0, 1)")
    L = _truncation_length(rel_tol)
    s_max = -math.expm1(-L)

    def f(s):
        # x = -log(1 - s), dx/ds = 1 / (1 - s)
        x = -np.log1p(-s)
        return integrand_U0(x) / (1.0 - s)

    body = adaptive_integrate(f, 0.0, s_max, rel_tol=rel_tol / 10.0, max_intervals=max_intervals)
    tail, tail_err = tail_area(L)
    return NumericEstimate(body.value + tail, body.error_bound + tail_err, body.work)


def spread_square_integral(n: int) -> float:
    """Area under y = exp(-n x) / n over x > 0, which is 1/n**2."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    # beyond x = 40/n the remaining area is exp(-40)/n**2, below double resolution of 1/n**2
    upper = 40.0 / n
    est = adaptive_integrate(lambda x: np.exp(-n * x) / n, 0.0, upper,
                             abs_tol=1e-17 / (n * n), rel_tol=1e-14)
    return est.value
