# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels.

Same contracts as ``_kernels_py``.  The analytic Jacobian determinant is
accumulated in C ``long double``.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, log, exp, expm1, log1p, fabs, sqrt, M_PI
from libc.math cimport tanl

cnp.import_array()

cdef enum:
    SUB0 = 0
    SUB1 = 1
    SUB2 = 2
    BOUNDARY = 3
    OUTSIDE = 4

cdef double LN2 = 0.6931471805599453
cdef double[3] W6 = [3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0]


cdef inline double _height(double x) nogil:
    if x < LN2:
        return -log(-expm1(-x))
    return -log1p(-exp(-x))


def boundary_height(x):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            ov[i] = _height(xv[i])
    return out.reshape(np.shape(x))


cdef inline void _g(double a, double b, double* x, double* y) nogil:
    cdef double s = sin(a + b)
    x[0] = log(s / sin(a))
    y[0] = log(s / sin(b))


def log_sides(alpha, beta):
    cdef const double[::1] av = np.ascontiguousarray(alpha, dtype=np.float64).ravel()
    cdef const double[::1] bv = np.ascontiguousarray(beta, dtype=np.float64).ravel()
    cdef Py_ssize_t n = av.shape[0], i
    xs = np.empty(n, dtype=np.float64)
    ys = np.empty(n, dtype=np.float64)
    cdef double[::1] xv = xs
    cdef double[::1] yv = ys
    with nogil:
        for i in range(n):
            _g(av[i], bv[i], &xv[i], &yv[i])
    shape = np.shape(alpha)
    return xs.reshape(shape), ys.reshape(shape)


def det_G_analytic(alpha, beta):
    cdef const double[::1] av = np.ascontiguousarray(alpha, dtype=np.float64).ravel()
    cdef const double[::1] bv = np.ascontiguousarray(beta, dtype=np.float64).ravel()
    cdef Py_ssize_t n = av.shape[0], i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef long double a, b, cab, ca, cb
    with nogil:
        for i in range(n):
            a = av[i]
            b = bv[i]
            cab = 1.0 / tanl(a + b)
            ca = 1.0 / tanl(a)
            cb = 1.0 / tanl(b)
            ov[i] = <double>((cab - ca) * (cab - cb) - cab * cab)
    return out.reshape(np.shape(alpha))


def fd_det_G(alpha, beta, h):
    cdef const double[::1] av = np.ascontiguousarray(alpha, dtype=np.float64).ravel()
    cdef const double[::1] bv = np.ascontiguousarray(beta, dtype=np.float64).ravel()
    cdef const double[::1] hv = np.ascontiguousarray(
        np.broadcast_to(np.asarray(h, dtype=np.float64), np.shape(alpha)), dtype=np.float64).ravel()
    cdef Py_ssize_t n = av.shape[0], i
    cdef int k
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double a, b, ha, hb, xp, yp, xm, ym, j11, j12, j21, j22
    with nogil:
        for i in range(n):
            a = av[i]
            b = bv[i]
            ha = (a + hv[i]) - a
            hb = (b + hv[i]) - b
            j11 = 0.0
            j12 = 0.0
            j21 = 0.0
            j22 = 0.0
            for k in range(3):
                _g(a + (k + 1) * ha, b, &xp, &yp)
                _g(a - (k + 1) * ha, b, &xm, &ym)
                j11 = j11 + W6[k] * (xp - xm)
                j21 = j21 + W6[k] * (yp - ym)
                _g(a, b + (k + 1) * hb, &xp, &yp)
                _g(a, b - (k + 1) * hb, &xm, &ym)
                j12 = j12 + W6[k] * (xp - xm)
                j22 = j22 + W6[k] * (yp - ym)
            j11 = j11 / ha
            j21 = j21 / ha
            j12 = j12 / hb
            j22 = j22 / hb
            ov[i] = j11 * j22 - j12 * j21
    return out.reshape(np.shape(alpha))


cdef inline signed char _rank_label(double v0, double v1, double v2,
                                    double d01, double d02, double d12,
                                    double eps) nogil:
    # index of the strictly largest value; ties within eps of the
    # separating line are BOUNDARY.  Ordering matches a stable descending sort.
    cdef int top, second
    if v0 >= v1 and v0 >= v2:
        top = 0
        second = 1 if v1 >= v2 else 2
    elif v1 >= v2:
        top = 1
        second = 0 if v0 >= v2 else 2
    else:
        top = 2
        second = 0 if v0 >= v1 else 1
    cdef double d
    if (top == 0 and second == 1) or (top == 1 and second == 0):
        d = d01
    elif (top == 0 and second == 2) or (top == 2 and second == 0):
        d = d02
    else:
        d = d12
    if d <= eps:
        return BOUNDARY
    return <signed char>top


def classify_angles(alpha, beta, double eps):
    cdef const double[::1] av = np.ascontiguousarray(alpha, dtype=np.float64).ravel()
    cdef const double[::1] bv = np.ascontiguousarray(beta, dtype=np.float64).ravel()
    cdef Py_ssize_t n = av.shape[0], i
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] ov = out
    cdef double a, b, g
    cdef double r5 = sqrt(5.0), r2 = sqrt(2.0)
    with nogil:
        for i in range(n):
            a = av[i]
            b = bv[i]
            g = M_PI - a - b
            if a < -eps or b < -eps or g < -eps:
                ov[i] = OUTSIDE
            else:
                ov[i] = _rank_label(g, a, b, fabs(g - a) / r5, fabs(g - b) / r5,
                                    fabs(a - b) / r2, eps)
    return out.reshape(np.shape(alpha))


def classify_log_sides(x, y, double eps):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef const double[::1] yv = np.ascontiguousarray(y, dtype=np.float64).ravel()
    cdef Py_ssize_t n = xv.shape[0], i
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] ov = out
    cdef double a, b, u, v
    cdef double r2 = sqrt(2.0)
    with nogil:
        for i in range(n):
            u = xv[i]
            v = yv[i]
            a = exp(-u)
            b = exp(-v)
            if a + b - 1.0 < -eps or 1.0 + b - a < -eps or 1.0 + a - b < -eps:
                ov[i] = OUTSIDE
            else:
                ov[i] = _rank_label(0.0, -u, -v, fabs(u), fabs(v), fabs(u - v) / r2, eps)
    return out.reshape(np.shape(x))


# h(1) = 0.45867...; the boundary is symmetric in x and y, so any point with
# one coordinate >= 1 and the other >= REJECT is outside U0
cdef double REJECT = 0.4588


def count_below_boundary(x, y):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef const double[::1] yv = np.ascontiguousarray(y, dtype=np.float64).ravel()
    cdef Py_ssize_t n = xv.shape[0], i
    cdef long long count = 0
    cdef double u, v
    with nogil:
        for i in range(n):
            u = xv[i]
            v = yv[i]
            if not (u > 0 and v > 0):
                continue
            if (u >= 1.0 and v >= REJECT) or (v >= 1.0 and u >= REJECT):
                continue
            if v < _height(u):
                count += 1
    return int(count)


def pile_heights(x, int n_terms):
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64).ravel()
    cdef Py_ssize_t m = xv.shape[0], i
    cdef int k
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double total, t, tk
    with nogil:
        for i in range(m):
            t = exp(-xv[i])
            tk = 1.0
            total = 0.0
            for k in range(1, n_terms + 1):
                tk = tk * t
                total = total + tk / k
            ov[i] = total
    return out.reshape(np.shape(x))
