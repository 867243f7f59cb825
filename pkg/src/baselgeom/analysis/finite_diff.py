"""Central-difference Jacobian determinants of planar maps."""

from __future__ import annotations

import math
from typing import Callable, Sequence

from ..errors import BaselGeomError, EvaluationError

PlanarMap = Callable[[tuple[float, float]], Sequence[float]]

CBRT_EPS = 2.220446049250313e-16 ** (1.0 / 3.0)

# one-sided halves of the central first-derivative stencils
STENCILS = {
    2: ((1, 0.5),),
    4: ((1, 2 / 3), (2, -1 / 12)),
    6: ((1, 3 / 4), (2, -3 / 20), (3, 1 / 60)),
}


def default_step(p: Sequence[float]) -> float:
    """max(|p|, 1) * cbrt(machine epsilon)."""
    return max(math.hypot(p[0], p[1]), 1.0) * CBRT_EPS


def _eval(func: PlanarMap, u: float, v: float) -> tuple[float, float]:
    try:
        out = tuple(func((u, v)))
    except (BaselGeomError, ValueError, ArithmeticError) as exc:
        raise EvaluationError(f"map not evaluable at stencil point ({u!r}, {v!r}): {exc}") from exc
    if len(out) != 2 or not all(math.isfinite(o) for o in out):
        raise EvaluationError(f"map returned {out!r} at stencil point ({u!r}, {v!r})")
    return out


def fd_jacobian(func: PlanarMap, p: Sequence[float], h: float | None = None,
                order: int = 2) -> tuple[tuple[float, float], tuple[float, float]]:
    """Central-difference Jacobian of ``func`` at ``p``.

    The step is snapped so that ``p + h`` is exactly representable, which
    makes the difference quotient exact for affine maps.
    """
    if order not in STENCILS:
        raise ValueError(f"order must be one of {sorted(STENCILS)}")
    u, v = float(p[0]), float(p[1])
    if h is None:
        h = default_step((u, v))
    if not h > 0:
        raise ValueError("step must be positive")
    hu = (u + h) - u
    hv = (v + h) - v
    d_u = [0.0, 0.0]
    d_v = [0.0, 0.0]
    for k, w in STENCILS[order]:
        fp = _eval(func, u + k * hu, v)
        fm = _eval(func, u - k * hu, v)
        gp = _eval(func, u, v + k * hv)
        gm = _eval(func, u, v - k * hv)
        for i in range(2):
            d_u[i] += w * (fp[i] - fm[i])
            d_v[i] += w * (gp[i] - gm[i])
    return ((d_u[0] / hu, d_v[0] / hv), (d_u[1] / hu, d_v[1] / hv))


def fd_jacobian_det(func: PlanarMap, p: Sequence[float], h: float | None = None,
                    order: int = 2) -> float:
    (a, b), (c, d) = fd_jacobian(func, p, h, order)
    return a * d - b * c
