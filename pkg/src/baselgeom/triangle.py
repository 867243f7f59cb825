"""Bipolar coordinates of a triangle over the unit base.

A triangle whose base runs from (0, 0) to (1, 0) is described either by its
interior base angles ``(alpha, beta)`` (angular coordinates, a point of the
half square T) or by its two remaining side lengths ``(A, B)`` (radial
coordinates, a point of the unbounded polygon S).  ``A`` is the side opposite
``alpha`` and ``B`` the side opposite ``beta``.  The logarithmic coordinates
``(x, y) = (-log A, -log B)`` live in the amoeba U.

The maps between them::

    F     : T -> S    sine rule
    F^-1  : S -> T    cosine rule
    G     : T -> U    F followed by -log
    G^-1  : U -> T    exp followed by F^-1

All angles are in radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import ClampError, DomainError

EPS_BOUNDARY = 1e-9
CLAMP_WINDOW = 1e-12


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"non-finite coordinate {v!r}")


@dataclass(frozen=True)
class AngularCoords:
    """Interior base angles of a unit-base triangle, a point of closed T."""

    alpha: float
    beta: float
    tol: float = field(default=EPS_BOUNDARY, repr=False, compare=False, kw_only=True)

    def __post_init__(self) -> None:
        _check_finite(self.alpha, self.beta)
        for name, slack in self.slacks().items():
            if slack < -self.tol:
                raise DomainError(f"angles ({self.alpha!r}, {self.beta!r}) violate {name}")

    def slacks(self) -> dict[str, float]:
        return {
            "alpha > 0": self.alpha,
            "beta > 0": self.beta,
            "alpha + beta < pi": math.pi - self.alpha - self.beta,
        }

    @property
    def gamma(self) -> float:
        """Apex angle, pi - alpha - beta."""
        return math.pi - self.alpha - self.beta

    def __iter__(self) -> Iterator[float]:
        yield self.alpha
        yield self.beta


@dataclass(frozen=True)
class RadialCoords:
    """Side lengths (A, B) of a unit-base triangle, a point of closed S."""

    a: float
    b: float
    tol: float = field(default=EPS_BOUNDARY, repr=False, compare=False, kw_only=True)

    def __post_init__(self) -> None:
        _check_finite(self.a, self.b)
        if self.a <= 0 or self.b <= 0:
            raise DomainError(f"side lengths must be positive, got ({self.a!r}, {self.b!r})")
        for name, slack in self.slacks().items():
            if slack < -self.tol:
                raise DomainError(f"sides ({self.a!r}, {self.b!r}) violate {name}")

    def slacks(self) -> dict[str, float]:
        a, b = self.a, self.b
        return {"1 < A + B": a + b - 1.0, "A < 1 + B": 1.0 + b - a, "B < 1 + A": 1.0 + a - b}

    def __iter__(self) -> Iterator[float]:
        yield self.a
        yield self.b


@dataclass(frozen=True)
class LogRadialCoords:
    """Negated log side lengths (x, y), a point of the closed amoeba U."""

    x: float
    y: float
    tol: float = field(default=EPS_BOUNDARY, repr=False, compare=False, kw_only=True)

    def __post_init__(self) -> None:
        _check_finite(self.x, self.y)
        # raises DomainError naming the violated triangle inequality
        self.to_radial()

    def to_radial(self) -> RadialCoords:
        return RadialCoords(math.exp(-self.x), math.exp(-self.y), tol=self.tol)

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Jacobian2:
    """Row-major 2x2 real matrix.

    Entries may be extended-precision (``numpy.longdouble``) scalars; the
    determinant is then formed in that precision before rounding to float.
    """

    j11: float
    j12: float
    j21: float
    j22: float

    def __post_init__(self) -> None:
        for v in (self.j11, self.j12, self.j21, self.j22):
            if not np.isfinite(v):
                raise DomainError("Jacobian entry is not finite")

    def det(self) -> float:
        return float(self.j11 * self.j22 - self.j12 * self.j21)

    def as_floats(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((float(self.j11), float(self.j12)), (float(self.j21), float(self.j22)))


def _require_interior(p: AngularCoords, eps: float) -> None:
    for name, slack in p.slacks().items():
        if slack <= eps:
            raise DomainError(
                f"angles ({p.alpha!r}, {p.beta!r}) are within {eps:g} of the edge where {name} fails"
            )


def angles_to_sides(p: AngularCoords, eps: float = EPS_BOUNDARY) -> RadialCoords:
    """The sine-rule map F: (alpha, beta) -> (A, B)."""
    _require_interior(p, eps)
    s = math.sin(p.alpha + p.beta)
    return RadialCoords(math.sin(p.alpha) / s, math.sin(p.beta) / s)


def _safe_arccos(arg: float) -> float:
    if arg > 1.0:
        if arg - 1.0 > CLAMP_WINDOW:
            raise ClampError(f"arccos argument {arg!r} exceeds 1")
        arg = 1.0
    elif arg < -1.0:
        if -1.0 - arg > CLAMP_WINDOW:
            raise ClampError(f"arccos argument {arg!r} is below -1")
        arg = -1.0
    return math.acos(arg)


def sides_to_angles(q: RadialCoords) -> AngularCoords:
    """The cosine-rule map F^-1: (A, B) -> (alpha, beta)."""
    a, b = q.a, q.b
    alpha = _safe_arccos((1.0 - a * a + b * b) / (2.0 * b))
    beta = _safe_arccos((1.0 + a * a - b * b) / (2.0 * a))
    return AngularCoords(alpha, beta)


def angles_to_log_sides(p: AngularCoords, eps: float = EPS_BOUNDARY) -> LogRadialCoords:
    """The map G: (alpha, beta) -> (-log A, -log B)."""
    _require_interior(p, eps)
    s = math.sin(p.alpha + p.beta)
    return LogRadialCoords(math.log(s / math.sin(p.alpha)), math.log(s / math.sin(p.beta)))


def log_sides_to_angles(r: LogRadialCoords) -> AngularCoords:
    """G^-1, going through the radial coordinates."""
    return sides_to_angles(r.to_radial())


def jacobian_G_analytic(p: AngularCoords, eps: float = EPS_BOUNDARY) -> Jacobian2:
    """Closed-form Jacobian of G, evaluated in extended precision.

    Near the corners of T the entries grow like 1/angle and the determinant
    cancels terms of size 1/angle**2, so double precision alone cannot
    resolve ``det == 1`` to 1e-12 there.
    """
    _require_interior(p, eps)
    a = np.longdouble(p.alpha)
    b = np.longdouble(p.beta)
    one = np.longdouble(1)
    cab = one / np.tan(a + b)
    ca = one / np.tan(a)
    cb = one / np.tan(b)
    return Jacobian2(cab - ca, cab, cab, cab - cb)


def cot_identity_det(p: AngularCoords, eps: float = EPS_BOUNDARY) -> float:
    """-cot(a+b)(cot a + cot b) + cot a cot b, the expanded determinant."""
    _require_interior(p, eps)
    a = np.longdouble(p.alpha)
    b = np.longdouble(p.beta)
    one = np.longdouble(1)
    cab = one / np.tan(a + b)
    ca = one / np.tan(a)
    cb = one / np.tan(b)
    return float(-cab * (ca + cb) + ca * cb)
