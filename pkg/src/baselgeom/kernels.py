"""Batch kernel dispatch.

Loads the compiled ``_kernels`` extension when it was built, otherwise the
numpy implementation in ``_kernels_py``.  Set ``BASELGEOM_PURE=1`` to force
the numpy path.  ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os

from . import _kernels_py
from ._kernels_py import BOUNDARY, OUTSIDE, SUB0, SUB1, SUB2

_impl = _kernels_py
BACKEND = "python"

if os.environ.get("BASELGEOM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

boundary_height = _impl.boundary_height
log_sides = _impl.log_sides
det_G_analytic = _impl.det_G_analytic
fd_det_G = _impl.fd_det_G
classify_angles = _impl.classify_angles
classify_log_sides = _impl.classify_log_sides
count_below_boundary = _impl.count_below_boundary
pile_heights = _impl.pile_heights

__all__ = [
    "BACKEND",
    "SUB0",
    "SUB1",
    "SUB2",
    "BOUNDARY",
    "OUTSIDE",
    "boundary_height",
    "log_sides",
    "det_G_analytic",
    "fd_det_G",
    "classify_angles",
    "classify_log_sides",
    "count_below_boundary",
    "pile_heights",
]
