"""Lifting the line 1 + z + w = 0 to the curve 1 + e^s + e^t = 0.

With the arguments chosen in (0, 2*pi), a triangle with base angles
(alpha, beta) gives z = A e^{i(pi - beta)} and w = B e^{i(pi + alpha)}.
Writing z = e^s, w = e^t puts (s, t) on the curve X.  The map
``g_tilde`` goes from the imaginary parts (arg z, arg w) to the real parts
(log A, log B) on that branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError
from .triangle import EPS_BOUNDARY, AngularCoords, angles_to_log_sides, angles_to_sides

RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class LiftPoint:
    s_re: float
    s_im: float
    t_re: float
    t_im: float

    @property
    def s(self) -> complex:
        return complex(self.s_re, self.s_im)

    @property
    def t(self) -> complex:
        return complex(self.t_re, self.t_im)

    def residual(self) -> float:
        return abs(1.0 + cmath.exp(self.s) + cmath.exp(self.t))

    def __post_init__(self) -> None:
        if not self.residual() < RESIDUAL_TOL:
            raise DomainError(f"point is not on the curve 1 + e^s + e^t = 0 (residual {self.residual():.3g})")


def lift_from_angles(p: AngularCoords) -> LiftPoint:
    q = angles_to_sides(p)
    return LiftPoint(math.log(q.a), math.pi - p.beta, math.log(q.b), math.pi + p.alpha)


def eq34_residuals(p: AngularCoords) -> tuple[float, float]:
    """Real and imaginary parts of 1 + z + w, i.e. the two real equations.

    Imaginary part: A sin(beta) - B sin(alpha); real part: 1 - A cos(beta) - B cos(alpha).
    """
    q = angles_to_sides(p)
    a, b = q.a, q.b
    return (
        a * math.sin(p.beta) - b * math.sin(p.alpha),
        1.0 - a * math.cos(p.beta) - b * math.cos(p.alpha),
    )


def cosine_rule_from_eq34(p: AngularCoords) -> float:
    """Residual of A^2 = 1 + B^2 - 2B cos(alpha), derived by squaring.

    The real equation gives A cos(beta) = 1 - B cos(alpha); the imaginary one
    gives A sin(beta) = B sin(alpha).  Squaring and adding the right-hand
    sides yields the cosine rule for A^2.
    """
    q = angles_to_sides(p)
    a, b = q.a, q.b
    a_cos_beta = 1.0 - b * math.cos(p.alpha)
    a_sin_beta = b * math.sin(p.alpha)
    a_squared = a_cos_beta ** 2 + a_sin_beta ** 2
    # the right-hand side expands to 1 + B^2 - 2 B cos(alpha)
    return a * a - a_squared


def g_tilde(imag_parts: tuple[float, float], eps: float = EPS_BOUNDARY) -> tuple[float, float]:
    """(arg z, arg w) -> (log |z|, log |w|) on the branch arg z in (0, pi), arg w in (pi, 2 pi)."""
    u, v = imag_parts
    alpha = v - math.pi
    beta = math.pi - u
    if not (u > eps and alpha > eps and beta > eps and alpha + beta < math.pi - eps):
        raise DomainError(f"({u!r}, {v!r}) is outside the interior of the lifted branch")
    q = angles_to_sides(AngularCoords(alpha, beta), eps)
    return math.log(q.a), math.log(q.b)


def verify_matrix_identity(p: AngularCoords) -> float:
    """Max-norm gap between G(p) and N . g_tilde(M p + (pi, pi)).

    M = [[0, -1], [1, 0]], N = -identity.  The translation by (pi, pi) puts
    M p on the argument branch used by ``g_tilde``.
    """
    x, y = angles_to_log_sides(p)
    u = -p.beta + math.pi
    v = p.alpha + math.pi
    la, lb = g_tilde((u, v))
    return max(abs(x - (-la)), abs(y - (-lb)))
