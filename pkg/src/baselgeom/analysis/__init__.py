"""Quadrature, Monte Carlo, finite differences and series for the area of U0."""

from .finite_diff import default_step, fd_jacobian, fd_jacobian_det
from .montecarlo import mc_area_T, mc_area_U0
from .quadrature import (
    NumericEstimate,
    adaptive_integrate,
    integrand_U0,
    integrate_area_U0,
    spread_square_integral,
)
from .series import (
    SeriesPartial,
    dyadic_grouping_lower_bound,
    harmonic_partial,
    harmonic_partials,
    log_series_partial,
    pile_covering_index,
    pile_height,
    zeta2_partial,
    zeta2_partials,
)
from .spread import spread_square_bijection
from .tails import tail_area, tail_bound

__all__ = [
    "NumericEstimate",
    "SeriesPartial",
    "adaptive_integrate",
    "default_step",
    "dyadic_grouping_lower_bound",
    "fd_jacobian",
    "fd_jacobian_det",
    "harmonic_partial",
    "harmonic_partials",
    "integrand_U0",
    "integrate_area_U0",
    "log_series_partial",
    "mc_area_T",
    "mc_area_U0",
    "pile_covering_index",
    "pile_height",
    "spread_square_bijection",
    "spread_square_integral",
    "tail_area",
    "tail_bound",
    "zeta2_partial",
    "zeta2_partials",
]
