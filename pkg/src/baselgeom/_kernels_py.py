"""Vectorised numpy implementations of the batch kernels.

Used when the compiled ``_kernels`` extension is unavailable (or disabled via
``BASELGEOM_PURE=1``).  Every function here has a twin in ``_kernels.pyx``
with the same signature and semantics.
"""

from __future__ import annotations

import math

import numpy as np

SUB0, SUB1, SUB2, BOUNDARY, OUTSIDE = 0, 1, 2, 3, 4

_LN2 = math.log(2.0)

# 7-point central first-derivative stencil: (offset, weight)
STENCIL6 = ((1, 3 / 4), (2, -3 / 20), (3, 1 / 60))


def boundary_height(x):
    """-log(1 - exp(-x)) for x > 0, without cancellation near 0."""
    x = np.asarray(x, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        small = -np.log(-np.expm1(-x))
        large = -np.log1p(-np.exp(-x))
    return np.where(x < _LN2, small, large)


def log_sides(alpha, beta):
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.float64)
    s = np.sin(alpha + beta)
    return np.log(s / np.sin(alpha)), np.log(s / np.sin(beta))


def det_G_analytic(alpha, beta):
    a = np.asarray(alpha, dtype=np.float64).astype(np.longdouble)
    b = np.asarray(beta, dtype=np.float64).astype(np.longdouble)
    one = np.longdouble(1)
    cab = one / np.tan(a + b)
    ca = one / np.tan(a)
    cb = one / np.tan(b)
    return ((cab - ca) * (cab - cb) - cab * cab).astype(np.float64)


def fd_det_G(alpha, beta, h):
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.float64)
    h = np.broadcast_to(np.asarray(h, dtype=np.float64), alpha.shape)
    ha = (alpha + h) - alpha
    hb = (beta + h) - beta
    j11 = np.zeros_like(alpha)
    j12 = np.zeros_like(alpha)
    j21 = np.zeros_like(alpha)
    j22 = np.zeros_like(alpha)
    for k, w in STENCIL6:
        xp, yp = log_sides(alpha + k * ha, beta)
        xm, ym = log_sides(alpha - k * ha, beta)
        j11 += w * (xp - xm)
        j21 += w * (yp - ym)
        xp, yp = log_sides(alpha, beta + k * hb)
        xm, ym = log_sides(alpha, beta - k * hb)
        j12 += w * (xp - xm)
        j22 += w * (yp - ym)
    j11 /= ha
    j21 /= ha
    j12 /= hb
    j22 /= hb
    return j11 * j22 - j12 * j21


def _label_from_ranks(values, distances, eps):
    """Label by the index of the strictly largest of three values.

    ``distances[i][j]`` is the distance to the tie line between values i and j.
    """
    stacked = np.stack(values)
    order = np.argsort(-stacked, axis=0, kind="stable")
    top = order[0]
    second = order[1]
    dist = np.empty(top.shape, dtype=np.float64)
    for i in range(3):
        for j in range(3):
            if i != j:
                sel = (top == i) & (second == j)
                dist[sel] = distances[min(i, j), max(i, j)][sel]
    labels = top.astype(np.int8)
    labels[dist <= eps] = BOUNDARY
    return labels


def classify_angles(alpha, beta, eps):
    alpha = np.asarray(alpha, dtype=np.float64)
    beta = np.asarray(beta, dtype=np.float64)
    gamma = np.pi - alpha - beta
    outside = (alpha < -eps) | (beta < -eps) | (gamma < -eps)
    distances = {
        (0, 1): np.abs(gamma - alpha) / math.sqrt(5.0),
        (0, 2): np.abs(gamma - beta) / math.sqrt(5.0),
        (1, 2): np.abs(alpha - beta) / math.sqrt(2.0),
    }
    labels = _label_from_ranks((gamma, alpha, beta), distances, eps)
    labels[outside] = OUTSIDE
    return labels


def classify_log_sides(x, y, eps):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    a = np.exp(-x)
    b = np.exp(-y)
    outside = (a + b - 1.0 < -eps) | (1.0 + b - a < -eps) | (1.0 + a - b < -eps)
    distances = {
        (0, 1): np.abs(x),
        (0, 2): np.abs(y),
        (1, 2): np.abs(x - y) / math.sqrt(2.0),
    }
    labels = _label_from_ranks((np.zeros_like(x), -x, -y), distances, eps)
    labels[outside] = OUTSIDE
    return labels


def count_below_boundary(x, y):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return int(np.count_nonzero((x > 0) & (y > 0) & (y < boundary_height(x))))


def pile_heights(x, n_terms):
    x = np.asarray(x, dtype=np.float64)
    total = np.zeros_like(x)
    for n in range(1, n_terms + 1):
        total += np.exp(-n * x) / n
    return total
