"""Regions S, T, U, their three-fold subdivisions, and the cyclic map on U.

Subsets are labelled by which side of the triangle is the longest (for U) or
which angle is the largest (for T):

* ``SUB0`` - the base is longest / the apex angle gamma is largest
* ``SUB1`` - side A is longest / alpha is largest
* ``SUB2`` - side B is longest / beta is largest

G sends the medians of T onto the asymptotes of U, so the two labellings
agree along G.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from . import kernels
from .errors import DomainError
from .triangle import EPS_BOUNDARY, AngularCoords, LogRadialCoords


class Membership(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class RegionLabel(enum.IntEnum):
    SUB0 = kernels.SUB0
    SUB1 = kernels.SUB1
    SUB2 = kernels.SUB2
    BOUNDARY = kernels.BOUNDARY
    OUTSIDE = kernels.OUTSIDE

    def successor(self) -> RegionLabel:
        if self > RegionLabel.SUB2:
            return self
        return RegionLabel((self + 1) % 3)


# vertex cycle of T0 in angular coordinates
POLYGON_T0 = ((0.0, 0.0), (math.pi / 2, 0.0), (math.pi / 3, math.pi / 3), (0.0, math.pi / 2))


def _membership(slacks, eps: float) -> Membership:
    if any(s < -eps for s in slacks):
        return Membership.OUTSIDE
    if all(s > eps for s in slacks):
        return Membership.INTERIOR
    return Membership.BOUNDARY


def membership_T(alpha: float, beta: float, eps: float = EPS_BOUNDARY) -> Membership:
    return _membership((alpha, beta, math.pi - alpha - beta), eps)


def membership_S(a: float, b: float, eps: float = EPS_BOUNDARY) -> Membership:
    return _membership((a + b - 1.0, 1.0 + b - a, 1.0 + a - b), eps)


def membership_U(x: float, y: float, eps: float = EPS_BOUNDARY) -> Membership:
    return membership_S(math.exp(-x), math.exp(-y), eps)


def classify_T(p: AngularCoords, eps: float = EPS_BOUNDARY) -> RegionLabel:
    label = kernels.classify_angles(np.array([p.alpha]), np.array([p.beta]), eps)[0]
    return RegionLabel(int(label))


def classify_U(r: LogRadialCoords, eps: float = EPS_BOUNDARY) -> RegionLabel:
    label = kernels.classify_log_sides(np.array([r.x]), np.array([r.y]), eps)[0]
    return RegionLabel(int(label))


def cyclic_map(r: LogRadialCoords) -> LogRadialCoords:
    """(x, y) -> (-y, x - y), sending U0 -> U1 -> U2 -> U0."""
    return LogRadialCoords(-r.y, r.x - r.y)


def cyclic_map_inverse(r: LogRadialCoords) -> LogRadialCoords:
    """(x, y) -> (y - x, -x)."""
    return LogRadialCoords(r.y - r.x, -r.x)


def cyclic_map_arrays(x, y):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return -y, x - y


def amoeba_boundary_height(x: float) -> float:
    """Height -log(1 - e^-x) of the boundary of U0 above the point x > 0."""
    if not x > 0:
        raise DomainError(f"boundary height needs x > 0, got {x!r}")
    return float(kernels.boundary_height(np.array([x], dtype=np.float64))[0])


def shoelace_area(vertices) -> float:
    n = len(vertices)
    terms = []
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        terms.append(x0 * y1 - x1 * y0)
    return abs(math.fsum(terms)) / 2.0


def area_T_exact() -> float:
    """Area of the half square T with legs pi."""
    return math.pi * math.pi / 2.0


def area_T0_exact() -> float:
    return shoelace_area(POLYGON_T0)


def sample_T_arrays(count: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Uniform samples of T as two arrays (alpha, beta)."""
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(seed)
    u = rng.random((count, 2))
    flip = u.sum(axis=1) > 1.0
    u[flip] = 1.0 - u[flip]
    return math.pi * u[:, 0], math.pi * u[:, 1]


def sample_T(count: int, seed: int) -> list[AngularCoords]:
    alpha, beta = sample_T_arrays(count, seed)
    return [AngularCoords(a, b) for a, b in zip(alpha.tolist(), beta.tolist())]
