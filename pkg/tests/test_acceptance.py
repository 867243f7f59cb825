"""Acceptance criteria, one test per criterion, each at its stated tolerance.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run as a script.
"""

import math
import subprocess
import sys
import time

import mpmath
import numpy as np
import pytest

from baselgeom import (
    AngularCoords,
    area_T0_exact,
    area_T_exact,
    eq34_residuals,
    g_tilde,
    verify_matrix_identity,
)
from baselgeom import kernels
from baselgeom.analysis import (
    fd_jacobian_det,
    harmonic_partial,
    integrate_area_U0,
    log_series_partial,
    mc_area_U0,
    pile_covering_index,
    pile_height,
    spread_square_integral,
    zeta2_partial,
)
from baselgeom.regions import amoeba_boundary_height, cyclic_map_arrays, sample_T_arrays

PI2_6 = math.pi ** 2 / 6
RESULTS: list[str] = []


def record(number, title, ok, detail):
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} ({detail})")
    print(RESULTS[-1])
    assert ok, RESULTS[-1]


def interior_points(count, seed, margin):
    alphas, betas, draw = [], [], 0
    while sum(a.size for a in alphas) < count:
        a, b = sample_T_arrays(2 * count, seed + 1000 * draw)
        keep = (a > margin) & (b > margin) & (math.pi - a - b > margin)
        alphas.append(a[keep])
        betas.append(b[keep])
        draw += 1
    return np.concatenate(alphas)[:count], np.concatenate(betas)[:count]


def test_criterion_1_jacobian():
    start = time.perf_counter()
    a, b = interior_points(10_000, 1, 1e-3)
    analytic = np.max(np.abs(kernels.det_G_analytic(a, b) - 1.0))
    dist = np.minimum.reduce([a, b, math.pi - a - b])
    fd = np.max(np.abs(kernels.fd_det_G(a, b, dist * np.finfo(float).eps ** (1 / 7)) - 1.0))
    elapsed = time.perf_counter() - start
    # the generic scalar difference routine agrees on a subsample
    G = lambda q: kernels.log_sides(np.array([q[0]]), np.array([q[1]]))
    scalar = max(abs(fd_jacobian_det(lambda q: tuple(float(c[0]) for c in G(q)), (x, y), h=d * 6e-3, order=6) - 1.0)
                 for x, y, d in zip(a[:200].tolist(), b[:200].tolist(), dist[:200].tolist()))
    ok = analytic < 1e-12 and fd < 1e-6 and scalar < 1e-6 and elapsed < 1.0
    record(1, "Jacobian of G is 1", ok,
           f"n={a.size}, analytic {analytic:.2e} < 1e-12, fd {fd:.2e} < 1e-6, "
           f"scalar fd {scalar:.2e}, {elapsed:.2f}s < 1s")


def test_criterion_2_areas():
    start = time.perf_counter()
    t_err = abs(area_T_exact() - math.pi ** 2 / 2)
    t0_err = abs(area_T0_exact() - PI2_6)
    quad = integrate_area_U0(1e-10)
    quad_err = abs(quad.value - PI2_6)
    mc = mc_area_U0(1_000_000, 20.0, seed=0)
    mc_err = abs(mc.value - PI2_6)
    elapsed = time.perf_counter() - start
    ok = t_err < 1e-12 and t0_err < 1e-12 and quad_err <= 1e-9 and mc_err <= mc.error_bound and elapsed < 5.0
    record(2, "areas of T, T0 and U0", ok,
           f"T {t_err:.1e}, T0 {t0_err:.1e}, quad {quad_err:.1e} <= 1e-9, "
           f"MC {mc.value:.5f} off by {mc_err:.2e} <= {mc.error_bound:.2e}, {elapsed:.2f}s < 5s")


def test_criterion_3_cyclic():
    a, b = sample_T_arrays(100_000, 2)
    x, y = kernels.log_sides(a, b)
    lab = kernels.classify_log_sides(x, y, 1e-9)
    u, v = cyclic_map_arrays(x, y)
    nxt = kernels.classify_log_sides(u, v, 1e-9)
    clean = (lab <= 2) & (nxt <= 2)
    violations = int(np.count_nonzero((lab[clean] + 1) % 3 != nxt[clean]))
    for _ in range(2):
        u, v = cyclic_map_arrays(u, v)
    rel = float(np.max(np.hypot(u - x, v - y) / np.maximum(np.hypot(x, y), 1.0)))
    ok = violations == 0 and rel < 1e-12
    record(3, "cyclic map permutes U0 -> U1 -> U2", ok,
           f"{int(clean.sum())} labelled samples, {violations} violations, order-3 error {rel:.1e} < 1e-12")


def test_criterion_4_series():
    bad_remainder = 0
    for t in (0.1, 0.5, 0.9):
        for n in range(1, 51):
            s = log_series_partial(t, n)
            with mpmath.workdps(30 + int(n * -math.log10(t))):
                tm = mpmath.mpf(t)
                true = -mpmath.log1p(-tm) - mpmath.fsum(tm ** k / k for k in range(1, n + 1))
            bad_remainder += not (0 <= true <= s.remainder_bound)
    z_err = abs(zeta2_partial(10 ** 6).partial_sum - PI2_6)
    bad_harmonic = sum(not harmonic_partial(n) > math.log1p(n) for n in range(1, 10 ** 4 + 1))
    bad_zeta = sum(not zeta2_partial(n).partial_sum < 2 - 1 / n for n in range(2, 10 ** 4 + 1))
    ok = bad_remainder == 0 and z_err < 1e-6 and bad_harmonic == 0 and bad_zeta == 0
    record(4, "series bounds", ok,
           f"remainder violations {bad_remainder}/150, zeta2(1e6) off by {z_err:.7e} < 1e-6, "
           f"harmonic violations {bad_harmonic}, 2 - 1/N violations {bad_zeta}")


def test_criterion_5_pile_cover():
    rng = np.random.default_rng(5)
    failures = 0
    for _ in range(100):
        b = float(rng.uniform(0.05, 5.0))
        a = float(rng.uniform(0.01, b))
        c = amoeba_boundary_height(b) * float(rng.uniform(0.05, 0.95))
        n = pile_covering_index(a, b, c)
        covers = all(pile_height(x, n) > c for x in np.linspace(a, b, 64).tolist())
        minimal = n == 1 or pile_height(b, n - 1) <= c
        failures += not (covers and minimal)
    grid = np.linspace(1e-3, 3.0, 1000).tolist()
    below = sum(not pile_height(x, n) < amoeba_boundary_height(x) for x in grid for n in (1, 2, 4, 8))
    ok = failures == 0 and below == 0
    record(5, "finite piles cover compact boxes", ok,
           f"100 boxes, {failures} failures; {below} grid points at or above the boundary out of 4000")


def test_criterion_6_pipeline():
    total = math.fsum(spread_square_integral(n) for n in range(1, 1001))
    gap = abs(total - zeta2_partial(1000).partial_sum)
    record(6, "sum of spread-square areas equals zeta2 partial", gap <= 1e-10, f"gap {gap:.2e} <= 1e-10")


def test_criterion_7_epilogue():
    a, b = interior_points(10_000, 7, 1e-9)
    eq = 0.0
    ident = 0.0
    for al, be in zip(a.tolist(), b.tolist()):
        p = AngularCoords(al, be)
        r3, r4 = eq34_residuals(p)
        eq = max(eq, abs(r3), abs(r4))
        ident = max(ident, verify_matrix_identity(p))
    ga, gb = interior_points(1000, 8, 0.05)
    jac = max(abs(fd_jacobian_det(g_tilde, (math.pi - be, math.pi + al), order=6) - 1.0)
              for al, be in zip(ga.tolist(), gb.tolist()))
    ok = eq < 1e-12 and ident < 1e-10 and jac < 1e-6
    record(7, "complex lift identities", ok,
           f"eq34 {eq:.1e} < 1e-12, identity {ident:.1e} < 1e-10, g_tilde Jacobian {jac:.1e} < 1e-6")


@pytest.mark.slow
def test_criterion_8_harness(tmp_path):
    start = time.perf_counter()
    outputs, codes = [], []
    for i in range(2):
        path = tmp_path / f"run{i}.json"
        proc = subprocess.run([sys.executable, "-m", "baselgeom", "check", "all", "--format", "json",
                               "--out", str(path)], capture_output=True, text=True)
        codes.append(proc.returncode)
        outputs.append(path.read_bytes() if path.exists() else b"")
    elapsed = time.perf_counter() - start
    ok = codes == [0, 0] and outputs[0] == outputs[1] and outputs[0] != b"" and elapsed < 30.0
    record(8, "check all is deterministic and passes", ok,
           f"exit codes {codes}, identical={outputs[0] == outputs[1]}, two runs in {elapsed:.1f}s < 30s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
