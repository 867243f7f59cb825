import ast
import math
from fractions import Fraction
from pathlib import Path

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import baselgeom.analysis.quadrature as quadrature
from baselgeom import (
    AngularCoords,
    BoundViolation,
    DomainError,
    EvaluationError,
    LogRadialCoords,
    NotContained,
    ToleranceNotMet,
    amoeba_boundary_height,
    angles_to_log_sides,
    cyclic_map,
)
from baselgeom.analysis import (
    NumericEstimate,
    SeriesPartial,
    adaptive_integrate,
    default_step,
    dyadic_grouping_lower_bound,
    fd_jacobian_det,
    harmonic_partial,
    harmonic_partials,
    integrand_U0,
    integrate_area_U0,
    log_series_partial,
    mc_area_U0,
    pile_covering_index,
    pile_height,
    spread_square_bijection,
    spread_square_integral,
    tail_area,
    tail_bound,
    zeta2_partial,
    zeta2_partials,
)

PI2_6 = math.pi ** 2 / 6
LN2 = math.log(2)


class TestFiniteDifference:
    def test_identity(self):
        for p in [(0.0, 0.0), (1.3, -2.7), (1e5, 3.0)]:
            assert abs(fd_jacobian_det(lambda q: q, p) - 1.0) < 1e-12

    def test_cyclic_map(self):
        f = lambda q: tuple(cyclic_map(LogRadialCoords(*q)))
        for p in [(0.0, 0.0), (0.4, 0.5), (-0.7, -0.3), (-0.5, 0.1)]:
            assert abs(fd_jacobian_det(f, p) - 1.0) < 1e-10

    def test_G_at_example_point(self):
        f = lambda q: angles_to_log_sides(AngularCoords(*q))
        det = fd_jacobian_det(f, (math.pi / 3 + 0.1, math.pi / 3 - 0.05))
        assert abs(det - 1.0) < 1e-6

    def test_linear_scaling(self):
        f = lambda q: (2 * q[0] + q[1], 3 * q[1])
        assert fd_jacobian_det(f, (0.7, 0.2)) == pytest.approx(6.0, abs=1e-10)

    def test_higher_orders_agree(self):
        f = lambda q: angles_to_log_sides(AngularCoords(*q))
        p = (0.9, 1.2)
        dets = [fd_jacobian_det(f, p, h=1e-3, order=k) for k in (2, 4, 6)]
        errs = [abs(d - 1) for d in dets]
        assert errs[2] < errs[0]
        assert errs[2] < 1e-9

    def test_default_step(self):
        assert default_step((0.0, 0.0)) == pytest.approx(6.055e-6, rel=1e-3)
        assert default_step((30.0, 40.0)) == pytest.approx(50 * 6.055e-6, rel=1e-3)

    def test_out_of_domain_stencil(self):
        f = lambda q: angles_to_log_sides(AngularCoords(*q))
        with pytest.raises(EvaluationError):
            fd_jacobian_det(f, (1e-7, 1.0), h=1e-5)

    def test_nonfinite_output(self):
        with pytest.raises(EvaluationError):
            fd_jacobian_det(lambda q: (math.log(q[0]) if q[0] > 0 else float("-inf"), q[1]), (0.0, 0.0), h=1e-3)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            fd_jacobian_det(lambda q: q, (0, 0), order=3)


class TestQuadrature:
    def test_area_U0(self):
        est = integrate_area_U0(1e-10)
        assert abs(est.value - PI2_6) <= 1e-9
        assert abs(est.value - PI2_6) <= est.error_bound
        assert est.work > 0

    def test_area_U0_against_mpmath(self):
        with mpmath.workdps(30):
            oracle = mpmath.quad(lambda x: -mpmath.log(1 - mpmath.exp(-x)), [0, 1, mpmath.inf])
        assert abs(integrate_area_U0(1e-10).value - float(oracle)) < 1e-9

    def test_looser_tolerance(self):
        est = integrate_area_U0(1e-6)
        assert abs(est.value - PI2_6) <= max(est.error_bound, 1e-6 * PI2_6)

    def test_truncation_at_L1(self):
        L = 1.0
        body = adaptive_integrate(integrand_U0, L, 60.0, rel_tol=1e-13)
        oracle = float(mpmath.polylog(2, mpmath.exp(-L)))
        assert abs(body.value - oracle) < 1e-12
        assert abs(tail_area(L)[0] - oracle) < 1e-15

    def test_integrand_symmetry_point(self):
        assert float(integrand_U0(np.array([LN2]))[0]) == pytest.approx(LN2, abs=1e-15)

    def test_budget_exhausted(self):
        with pytest.raises(ToleranceNotMet):
            integrate_area_U0(1e-15, max_intervals=3)
        with pytest.raises(ToleranceNotMet):
            adaptive_integrate(lambda x: np.sign(x - 0.3), 0.0, 1.0, rel_tol=1e-14, max_intervals=5)

    def test_rel_tol_validated(self):
        for bad in (0.0, -1.0, 1.0):
            with pytest.raises(ValueError):
                integrate_area_U0(bad)

    def test_polynomial_exact(self):
        est = adaptive_integrate(lambda x: x ** 10, 0.0, 1.0)
        assert est.value == pytest.approx(1 / 11, abs=1e-15)

    def test_numeric_estimate_validation(self):
        with pytest.raises(ValueError):
            NumericEstimate(float("nan"), 0.0, 1)
        with pytest.raises(ValueError):
            NumericEstimate(1.0, -1.0, 1)

    def test_does_not_import_series(self):
        tree = ast.parse(Path(quadrature.__file__).read_text())
        names = []
        for node in ast.walk(tree):
            if isinstance(node, ast.ImportFrom):
                names.append(node.module or "")
                names.extend(a.name for a in node.names)
            elif isinstance(node, ast.Import):
                names.extend(a.name for a in node.names)
        assert not any("series" in n for n in names)

    def test_independent_of_series_functions(self, monkeypatch):
        import baselgeom.analysis.series as series

        reference = integrate_area_U0(1e-10).value

        def boom(*args, **kwargs):
            raise AssertionError("series module used by quadrature")

        for name in ("log_series_partial", "pile_height", "zeta2_partial", "zeta2_partials",
                     "_log_series_cumsum"):
            monkeypatch.setattr(series, name, boom)
        assert integrate_area_U0(1e-10).value == reference


class TestTails:
    def test_tail_small(self):
        tail, err = tail_area(20.0)
        assert tail < 1e-7
        assert tail <= tail_bound(20.0)
        assert err < 1e-20

    def test_tail_bound_dominates(self):
        for L in (0.5, 1.0, 3.0, 10.0):
            assert tail_area(L)[0] <= tail_bound(L)

    def test_tail_matches_polylog(self):
        for L in (0.1, 1.0, 5.0):
            assert tail_area(L)[0] == pytest.approx(float(mpmath.polylog(2, mpmath.exp(-L))), rel=1e-14)


class TestMonteCarlo:
    def test_estimate(self):
        est = mc_area_U0(1_000_000, 20.0, seed=0)
        assert abs(est.value - PI2_6) <= est.error_bound
        assert est.work == 1_000_000

    def test_deterministic(self):
        a = mc_area_U0(100_000, 20.0, seed=7)
        b = mc_area_U0(100_000, 20.0, seed=7)
        assert a == b
        assert mc_area_U0(100_000, 20.0, seed=8).value != a.value

    def test_workers_do_not_change_result(self):
        a = mc_area_U0(200_000, 20.0, seed=3, shards=4, workers=1)
        b = mc_area_U0(200_000, 20.0, seed=3, shards=4, workers=4)
        assert a == b

    def test_sharded_estimate_valid(self):
        est = mc_area_U0(400_000, 20.0, seed=5, shards=3, workers=3)
        assert abs(est.value - PI2_6) <= est.error_bound

    def test_small_box(self):
        est = mc_area_U0(400_000, 3.0, seed=1)
        assert abs(est.value - PI2_6) <= est.error_bound

    def test_preconditions(self):
        with pytest.raises(ValueError):
            mc_area_U0(100_000, 0.5)
        with pytest.raises(ValueError):
            mc_area_U0(10, 20.0)


class TestSpreadSquares:
    @pytest.mark.parametrize("n, expected", [(1, 1.0), (3, 1 / 9), (10, 0.01)])
    def test_integral(self, n, expected):
        assert abs(spread_square_integral(n) - expected) < 1e-12

    def test_integral_many(self):
        for n in (2, 7, 50, 999):
            assert spread_square_integral(n) == pytest.approx(1 / n ** 2, rel=1e-12)

    def test_bijection_example(self):
        u, v = spread_square_bijection(1, (LN2, 0.25))
        assert u == pytest.approx(0.5, abs=1e-15)
        assert v == pytest.approx(0.5, abs=1e-15)

    def test_bijection_range(self, rng):
        for _ in range(10_000):
            n = int(rng.integers(1, 20))
            x = float(rng.exponential(1.0 / n)) + 1e-12
            y = float(rng.uniform(0.0, 1.0)) * math.exp(-n * x) / n
            if y <= 0:
                continue
            u, v = spread_square_bijection(n, (x, y))
            assert 0 < u < 1 / n and 0 < v < 1 / n

    def test_bijection_area_preserving(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 10))
            x = float(rng.uniform(0.05, 2.0)) / n
            y = float(rng.uniform(0.05, 0.9)) * math.exp(-n * x) / n
            det = fd_jacobian_det(lambda q: spread_square_bijection(n, q), (x, y), h=1e-5 * min(x, y) / 1e-2, order=6)
            assert abs(det - 1.0) < 1e-8

    def test_bijection_domain(self):
        with pytest.raises(DomainError):
            spread_square_bijection(1, (LN2, 0.6))
        with pytest.raises(DomainError):
            spread_square_bijection(2, (-0.1, 0.01))


class TestLogSeries:
    def test_limit_t_half(self):
        assert log_series_partial(0.5, 60).partial_sum == pytest.approx(LN2, abs=1e-15)

    def test_n10_bound(self):
        s = log_series_partial(0.5, 10)
        assert abs(s.partial_sum - LN2) <= 0.5 ** 10 * LN2
        assert s.remainder_bound == pytest.approx(0.5 ** 10 * LN2, rel=1e-15)

    def test_single_term(self):
        assert log_series_partial(0.3, 1).partial_sum == 0.3

    def test_domain(self):
        for t in (0.0, 1.0, -0.2, 1.5):
            with pytest.raises(DomainError):
                log_series_partial(t, 5)

    @given(st.floats(0.001, 0.999), st.integers(1, 200))
    @settings(max_examples=300)
    def test_remainder_sound(self, t, n):
        s = log_series_partial(t, n)
        # enough digits that the remainder survives the subtraction
        with mpmath.workdps(30 + int(n * -math.log10(t))):
            tm = mpmath.mpf(t)
            true = -mpmath.log1p(-tm) - mpmath.fsum(tm ** k / k for k in range(1, n + 1))
        assert float(true) <= s.remainder_bound
        # a few ulps of rounding in the terms and in log1p itself
        assert abs(-math.log1p(-t) - s.partial_sum) <= s.remainder_bound + 8e-16 * abs(math.log1p(-t))


class TestPiles:
    def test_log2_limit(self):
        assert pile_height(LN2, 60) == pytest.approx(LN2, abs=1e-15)

    def test_first_layer(self):
        for x in (0.1, 1.0, 4.0):
            assert pile_height(x, 1) == math.exp(-x)

    def test_increasing_and_below(self):
        for x in np.geomspace(1e-3, 3.0, 60).tolist():
            h = amoeba_boundary_height(x)
            prev = 0.0
            # beyond N = 8 the increments at x = 3 fall under one ulp of the pile
            for n in (1, 2, 4, 8):
                cur = pile_height(x, n)
                assert prev < cur < h
                prev = cur

    def test_supremum_is_boundary(self):
        for x in (0.5, 1.0, 2.0, 5.0):
            n = int(math.ceil(40 / x))
            assert abs(pile_height(x, n) - amoeba_boundary_height(x)) < 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            pile_height(0.0, 3)

    def _direct_search(self, b, c):
        n = 1
        while not pile_height(b, n) > c:
            n += 1
        return n

    def test_box_above_boundary_at_right_edge(self):
        # the boundary height at x = 2 is about 0.1454, so [1, 2] x [0, 0.25] leaves U0
        assert amoeba_boundary_height(2.0) < 0.25
        with pytest.raises(NotContained):
            pile_covering_index(1.0, 2.0, 0.25)

    @pytest.mark.parametrize("a, b, c", [(1.0, 2.0, 0.125), (1.0, 1.2, 0.25), (0.5, 2.0, 0.14)])
    def test_covering_examples(self, a, b, c):
        n = pile_covering_index(a, b, c)
        assert n == self._direct_search(b, c)
        assert pile_height(b, n) > c
        assert n == 1 or pile_height(b, n - 1) <= c
        for x in np.linspace(a, b, 50).tolist():
            assert pile_height(x, n) > c

    def test_covering_random_boxes(self, rng):
        for _ in range(100):
            a = float(rng.uniform(0.05, 3.0))
            b = float(rng.uniform(a, 3.5))
            c = float(rng.uniform(0.05, 0.99)) * amoeba_boundary_height(b)
            n = pile_covering_index(a, b, c)
            assert n == self._direct_search(b, c)

    def test_touching_box(self):
        with pytest.raises(NotContained):
            pile_covering_index(1.0, 2.0, amoeba_boundary_height(2.0))
        with pytest.raises(NotContained):
            pile_covering_index(1.0, 2.0, 5.0)
        with pytest.raises(NotContained):
            pile_covering_index(2.0, 1.0, 0.1)


class TestZeta2AndHarmonic:
    def test_one_term(self):
        s = zeta2_partial(1)
        assert s.partial_sum == 1.0 and s.remainder_bound == 1.0

    def test_hundred(self):
        oracle = sum(Fraction(1, n * n) for n in range(1, 101))
        s = zeta2_partial(100)
        assert s.partial_sum == pytest.approx(float(oracle), abs=1e-15)
        assert s.partial_sum == pytest.approx(1.6349839, abs=1e-7)
        assert abs(s.partial_sum - PI2_6) < 1 / 100

    def test_million(self):
        s = zeta2_partial(10 ** 6)
        assert abs(s.partial_sum - PI2_6) < 1e-6
        assert abs(s.partial_sum - PI2_6) <= s.remainder_bound

    def test_below_two_minus_one_over_n(self):
        sums = zeta2_partials(10 ** 4)
        n = np.arange(1, 10 ** 4 + 1)
        assert np.all(sums[1:] < 2 - 1 / n[1:])

    def test_harmonic_examples(self):
        assert harmonic_partial(1) == 1.0 > math.log(2)
        assert harmonic_partial(3) == pytest.approx(11 / 6, abs=1e-15)
        assert harmonic_partial(3) > math.log(4)
        assert harmonic_partial(10 ** 4) > math.log(10001)

    def test_harmonic_all(self):
        h = harmonic_partials(10 ** 4)
        assert np.all(h > np.log1p(np.arange(1, 10 ** 4 + 1)))

    def test_dyadic(self):
        assert dyadic_grouping_lower_bound(1) == 1.5
        assert harmonic_partial(2) == 1.5
        assert dyadic_grouping_lower_bound(3) == 2.5
        assert harmonic_partial(8) == pytest.approx(2.7179, abs=1e-4)
        bounds = [dyadic_grouping_lower_bound(k) for k in range(1, 16)]
        assert all(b2 > b1 for b1, b2 in zip(bounds, bounds[1:]))

    def test_validation(self):
        with pytest.raises(ValueError):
            zeta2_partial(0)
        with pytest.raises(ValueError):
            SeriesPartial(1, 0.0, -1.0)
        with pytest.raises(ValueError):
            dyadic_grouping_lower_bound(0)
        assert issubclass(BoundViolation, AssertionError)
