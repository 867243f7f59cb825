"""Numerical verification of a geometric proof that sum 1/n^2 = pi^2/6.

The proof moves between three coordinate systems for the apex of a
triangle over the unit base (angles, side lengths, log side lengths), shows
the angle-to-log-length map preserves area, cuts the resulting amoeba into
three congruent-area pieces, and recognises one piece as a pile of spread
squares of areas 1/n^2.  Every step is implemented here and checked
numerically by at least two independent routes.
"""

from .errors import (
    BaselGeomError,
    BoundViolation,
    ClampError,
    DomainError,
    EvaluationError,
    NotContained,
    ToleranceNotMet,
    UnknownCheck,
    UnknownFigure,
)
from .kernels import BACKEND
from .lift import (
    LiftPoint,
    cosine_rule_from_eq34,
    eq34_residuals,
    g_tilde,
    lift_from_angles,
    verify_matrix_identity,
)
from .regions import (
    POLYGON_T0,
    Membership,
    RegionLabel,
    amoeba_boundary_height,
    area_T0_exact,
    area_T_exact,
    classify_T,
    classify_U,
    cyclic_map,
    cyclic_map_inverse,
    membership_S,
    membership_T,
    membership_U,
    sample_T,
)
from .triangle import (
    EPS_BOUNDARY,
    AngularCoords,
    Jacobian2,
    LogRadialCoords,
    RadialCoords,
    angles_to_log_sides,
    angles_to_sides,
    jacobian_G_analytic,
    log_sides_to_angles,
    sides_to_angles,
)

__version__ = "0.1.0"
