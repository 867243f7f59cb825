"""Registered verification checks and the runner.

Each check reduces one statement of the proof to a single number compared
against an expected value: ``passed`` iff ``|measured - expected| <= tolerance``.
Sweep-style checks measure a worst-case deviation or a violation count, with
``expected = 0``.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import mpmath
import numpy as np

from .. import kernels
from ..analysis import (
    fd_jacobian_det,
    harmonic_partials,
    integrate_area_U0,
    log_series_partial,
    mc_area_T,
    mc_area_U0,
    pile_covering_index,
    pile_height,
    spread_square_bijection,
    spread_square_integral,
    zeta2_partial,
    zeta2_partials,
)
from ..analysis.series import dyadic_grouping_lower_bound
from ..errors import UnknownCheck
from ..lift import cosine_rule_from_eq34, eq34_residuals, g_tilde, verify_matrix_identity
from ..regions import (
    RegionLabel,
    amoeba_boundary_height,
    area_T0_exact,
    area_T_exact,
    cyclic_map_arrays,
    sample_T_arrays,
)
from ..triangle import AngularCoords, RadialCoords, angles_to_sides, sides_to_angles

SEED_ENV = "BASELGEOM_SEED"
SWEEP_MARGIN = 1e-3
ZETA2 = math.pi ** 2 / 6


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


@dataclass(frozen=True)
class RunConfig:
    seed: int = field(default_factory=default_seed)
    mc_samples: int = 1_000_000
    quad_rel_tol: float = 1e-10
    jacobian_sweep_points: int = 10_000
    cyclic_samples: int = 100_000
    format: str = "text"

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        for name in ("mc_samples", "jacobian_sweep_points", "cyclic_samples"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.quad_rel_tol < 1:
            raise ValueError("quad_rel_tol must lie in (0, 1)")
        if self.format not in ("text", "json"):
            raise ValueError("format must be 'text' or 'json'")


@dataclass(frozen=True)
class CheckReport:
    name: str
    measured: float
    expected: float
    tolerance: float
    passed: bool
    work: int
    seed: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _report(name, measured, expected, tolerance, work, seed=None) -> CheckReport:
    measured = float(measured)
    expected = float(expected)
    passed = bool(abs(measured - expected) <= tolerance)
    return CheckReport(name, measured, expected, float(tolerance), passed, int(work), seed)


def sweep_sample(count: int, seed: int, margin: float = SWEEP_MARGIN) -> tuple[np.ndarray, np.ndarray]:
    """Uniform points of T at distance > margin (in each angle) from its edges."""
    alphas, betas = [], []
    have = 0
    draw = 0
    while have < count:
        a, b = sample_T_arrays(2 * count, seed + draw)
        keep = (a > margin) & (b > margin) & (math.pi - a - b > margin)
        alphas.append(a[keep])
        betas.append(b[keep])
        have += int(keep.sum())
        draw += 1
    return np.concatenate(alphas)[:count], np.concatenate(betas)[:count]


def _local_fd_step(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    # 7-point stencil: step ~ (distance to edge of T) * eps**(1/7)
    dist = np.minimum(np.minimum(alpha, beta), math.pi - alpha - beta)
    return dist * np.finfo(np.float64).eps ** (1.0 / 7.0)


def check_jacobian_G_analytic(cfg: RunConfig) -> CheckReport:
    a, b = sweep_sample(cfg.jacobian_sweep_points, cfg.seed)
    dev = np.max(np.abs(kernels.det_G_analytic(a, b) - 1.0))
    return _report("jacobian-G-analytic", dev, 0.0, 1e-12, a.size, cfg.seed)


def check_jacobian_G(cfg: RunConfig) -> CheckReport:
    a, b = sweep_sample(cfg.jacobian_sweep_points, cfg.seed)
    dev = np.max(np.abs(kernels.fd_det_G(a, b, _local_fd_step(a, b)) - 1.0))
    return _report("jacobian-G", dev, 0.0, 1e-6, a.size, cfg.seed)


def check_roundtrip(cfg: RunConfig) -> CheckReport:
    a, b = sweep_sample(cfg.jacobian_sweep_points, cfg.seed)
    worst = 0.0
    for alpha, beta in zip(a.tolist(), b.tolist()):
        back = sides_to_angles(angles_to_sides(AngularCoords(alpha, beta)))
        worst = max(worst, abs(back.alpha - alpha), abs(back.beta - beta))
    return _report("roundtrip-F", worst, 0.0, 1e-9, a.size, cfg.seed)


def check_area_T(cfg: RunConfig) -> CheckReport:
    return _report("area-t", area_T_exact(), 3.0 * ZETA2, 1e-12, 1)


def check_area_T_mc(cfg: RunConfig) -> CheckReport:
    est = mc_area_T(cfg.mc_samples, cfg.seed)
    return _report("area-t-mc", est.value, math.pi ** 2 / 2, est.error_bound, est.work, cfg.seed)


def check_area_T0(cfg: RunConfig) -> CheckReport:
    return _report("area-t0", area_T0_exact(), ZETA2, 1e-12, 4)


def check_area_U0_quad(cfg: RunConfig) -> CheckReport:
    est = integrate_area_U0(cfg.quad_rel_tol)
    return _report("area-u0-quad", est.value, ZETA2, cfg.quad_rel_tol * ZETA2, est.work)


def check_area_U0_mc(cfg: RunConfig) -> CheckReport:
    est = mc_area_U0(cfg.mc_samples, 20.0, cfg.seed)
    return _report("area-u0-mc", est.value, ZETA2, est.error_bound, est.work, cfg.seed)


def check_cyclic(cfg: RunConfig) -> CheckReport:
    a, b = sample_T_arrays(cfg.cyclic_samples, cfg.seed)
    x, y = kernels.log_sides(a, b)
    eps = 1e-9
    label_t = kernels.classify_angles(a, b, eps)
    label_u = kernels.classify_log_sides(x, y, eps)
    xi, eta = cyclic_map_arrays(x, y)
    label_next = kernels.classify_log_sides(xi, eta, eps)
    clean = (label_u <= RegionLabel.SUB2) & (label_next <= RegionLabel.SUB2) & (label_t <= RegionLabel.SUB2)
    violations = np.count_nonzero(clean & ((label_u + 1) % 3 != label_next))
    violations += np.count_nonzero(clean & (label_u != label_t))
    return _report("cyclic", violations, 0, 0, a.size, cfg.seed)


def check_cyclic_order3(cfg: RunConfig) -> CheckReport:
    a, b = sample_T_arrays(cfg.cyclic_samples, cfg.seed)
    x, y = kernels.log_sides(a, b)
    u, v = x, y
    for _ in range(3):
        u, v = cyclic_map_arrays(u, v)
    scale = np.maximum(np.hypot(x, y), 1.0)
    dev = np.max(np.hypot(u - x, v - y) / scale)
    return _report("cyclic-order3", dev, 0.0, 1e-12, a.size, cfg.seed)


def check_eq34(cfg: RunConfig) -> CheckReport:
    a, b = sweep_sample(cfg.jacobian_sweep_points, cfg.seed)
    worst = 0.0
    for alpha, beta in zip(a.tolist(), b.tolist()):
        r3, r4 = eq34_residuals(AngularCoords(alpha, beta))
        worst = max(worst, abs(r3), abs(r4))
    return _report("eq34", worst, 0.0, 1e-12, a.size, cfg.seed)


def check_cosine_rule(cfg: RunConfig) -> CheckReport:
    a, b = sweep_sample(cfg.jacobian_sweep_points, cfg.seed)
    worst = 0.0
    for alpha, beta in zip(a.tolist(), b.tolist()):
        p = AngularCoords(alpha, beta)
        side_a = angles_to_sides(p).a
        # relative to A^2, the size of the terms that cancel
        worst = max(worst, abs(cosine_rule_from_eq34(p)) / max(1.0, side_a * side_a))
    return _report("cosine-rule", worst, 0.0, 1e-10, a.size, cfg.seed)


def check_epilogue_identity(cfg: RunConfig) -> CheckReport:
    a, b = sweep_sample(cfg.jacobian_sweep_points, cfg.seed)
    worst = max(verify_matrix_identity(AngularCoords(al, be)) for al, be in zip(a.tolist(), b.tolist()))
    return _report("epilogue-identity", worst, 0.0, 1e-10, a.size, cfg.seed)


def check_g_tilde_jacobian(cfg: RunConfig) -> CheckReport:
    n = max(1, cfg.jacobian_sweep_points // 10)
    a, b = sweep_sample(n, cfg.seed, margin=0.05)
    worst = 0.0
    for alpha, beta in zip(a.tolist(), b.tolist()):
        det = fd_jacobian_det(g_tilde, (math.pi - beta, math.pi + alpha), order=6)
        worst = max(worst, abs(det - 1.0))
    return _report("g-tilde-jacobian", worst, 0.0, 1e-6, a.size, cfg.seed)


def check_series_remainder(cfg: RunConfig) -> CheckReport:
    violations = 0
    work = 0
    with mpmath.workdps(60):
        for t in (0.1, 0.5, 0.9):
            tm = mpmath.mpf(t)
            limit = -mpmath.log(1 - tm)
            for n_terms in range(1, 51):
                sp = log_series_partial(t, n_terms)
                exact_partial = mpmath.fsum(tm ** k / k for k in range(1, n_terms + 1))
                remainder = limit - exact_partial
                if not (0 <= remainder <= sp.remainder_bound):
                    violations += 1
                if abs(sp.partial_sum - exact_partial) > 1e-15:
                    violations += 1
                work += 1
    return _report("series-remainder", violations, 0, 0, work)


def check_zeta2_tail(cfg: RunConfig) -> CheckReport:
    sp = zeta2_partial(1_000_000)
    return _report("zeta2-tail", sp.partial_sum, ZETA2, 1e-6, sp.n_terms)


def check_harmonic(cfg: RunConfig) -> CheckReport:
    n_max = 10_000
    h = harmonic_partials(n_max)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    violations = int(np.count_nonzero(~(h > np.log1p(n))))
    violations += sum(dyadic_grouping_lower_bound(k) != 1 + k / 2 for k in range(1, 14))
    return _report("harmonic", violations, 0, 0, n_max)


def check_zeta2_bound(cfg: RunConfig) -> CheckReport:
    n_max = 10_000
    z = zeta2_partials(n_max)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    violations = int(np.count_nonzero(~(z[1:] < 2.0 - 1.0 / n[1:])))
    violations += int(np.count_nonzero(~(ZETA2 - z <= 1.0 / n)))
    return _report("zeta2-bound", violations, 0, 0, n_max)


def random_boxes(count: int, seed: int) -> list[tuple[float, float, float]]:
    """Boxes [a, b] x [0, c] in U0 with c a fraction of the boundary height at b."""
    rng = np.random.default_rng(seed)
    boxes = []
    for _ in range(count):
        b = float(rng.uniform(0.05, 5.0))
        a = float(rng.uniform(0.01, b))
        c = amoeba_boundary_height(b) * float(rng.uniform(0.05, 0.95))
        boxes.append((a, b, c))
    return boxes


def check_pile_cover(cfg: RunConfig) -> CheckReport:
    violations = 0
    boxes = random_boxes(100, cfg.seed)
    for a, b, c in boxes:
        n = pile_covering_index(a, b, c)
        xs = np.linspace(a, b, 64)
        if not all(pile_height(x, n) > c for x in xs.tolist()):
            violations += 1
        if n > 1 and not pile_height(b, n - 1) <= c:
            violations += 1
    return _report("pile-cover", violations, 0, 0, len(boxes), cfg.seed)


def pile_grid() -> np.ndarray:
    # beyond x ~ 3 the remainder of an 8-layer pile is below double resolution
    return np.linspace(1e-3, 3.0, 1000)


def check_pile_below(cfg: RunConfig) -> CheckReport:
    xs = pile_grid()
    h = kernels.boundary_height(xs)
    violations = 0
    previous = np.zeros_like(xs)
    for n_terms in (1, 2, 4, 8):
        pile = kernels.pile_heights(xs, n_terms)
        violations += int(np.count_nonzero(~(pile < h)))
        violations += int(np.count_nonzero(~(pile > previous)))
        previous = pile
    return _report("pile-below", violations, 0, 0, 4 * xs.size)


def check_spread_bijection(cfg: RunConfig) -> CheckReport:
    rng = np.random.default_rng(cfg.seed)
    worst = 0.0
    count = 0
    for n in (1, 2, 3, 5, 10):
        for _ in range(200):
            x = float(rng.uniform(0.05, 3.0 / n))
            y = float(rng.uniform(0.05, 0.9)) * math.exp(-n * x) / n
            u, v = spread_square_bijection(n, (x, y))
            if not (0 < u < 1 / n and 0 < v < 1 / n):
                worst = math.inf
            # keeps the 7-point stencil under the curve for these ranges
            h = 1e-5
            det = fd_jacobian_det(lambda q, n=n: spread_square_bijection(n, q), (x, y), h=h, order=6)
            worst = max(worst, abs(det - 1.0))
            count += 1
    return _report("spread-bijection", worst, 0.0, 1e-8, count, cfg.seed)


def check_pipeline(cfg: RunConfig) -> CheckReport:
    n_max = 1000
    total = math.fsum(spread_square_integral(n) for n in range(1, n_max + 1))
    return _report("pipeline", total, zeta2_partial(n_max).partial_sum, 1e-10, n_max)


CHECKS: dict[str, Callable[[RunConfig], CheckReport]] = {
    "jacobian-G-analytic": check_jacobian_G_analytic,
    "jacobian-G": check_jacobian_G,
    "roundtrip-F": check_roundtrip,
    "area-t": check_area_T,
    "area-t-mc": check_area_T_mc,
    "area-t0": check_area_T0,
    "area-u0-quad": check_area_U0_quad,
    "area-u0-mc": check_area_U0_mc,
    "cyclic": check_cyclic,
    "cyclic-order3": check_cyclic_order3,
    "series-remainder": check_series_remainder,
    "zeta2-tail": check_zeta2_tail,
    "harmonic": check_harmonic,
    "zeta2-bound": check_zeta2_bound,
    "pile-cover": check_pile_cover,
    "pile-below": check_pile_below,
    "spread-bijection": check_spread_bijection,
    "pipeline": check_pipeline,
    "eq34": check_eq34,
    "cosine-rule": check_cosine_rule,
    "epilogue-identity": check_epilogue_identity,
    "g-tilde-jacobian": check_g_tilde_jacobian,
}


def run_check(name: str, config: RunConfig | None = None) -> CheckReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownCheck(name) from None
    return fn(config or RunConfig())


def run_all(config: RunConfig | None = None, jobs: int = 1,
            expected_offsets: dict[str, float] | None = None) -> tuple[list[CheckReport], int]:
    """Run every registered check; returns the reports and the exit status.

    ``expected_offsets`` shifts a check's expected value after it ran.  It
    exists so tests can confirm a wrong expectation turns into exit status 1.
    """
    config = config or RunConfig()
    names = list(CHECKS)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(lambda n: run_check(n, config), names))
    else:
        reports = [run_check(n, config) for n in names]
    if expected_offsets:
        reports = [
            _report(r.name, r.measured, r.expected + expected_offsets[r.name], r.tolerance, r.work, r.seed)
            if r.name in expected_offsets else r
            for r in reports
        ]
    status = 0 if all(r.passed for r in reports) else 1
    return reports, status
