import importlib
import math
import os
import subprocess
import sys

import mpmath
import numpy as np
import pytest

from baselgeom import _kernels_py as pure
from baselgeom import kernels
from baselgeom.regions import sample_T_arrays

try:
    from baselgeom import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


@pytest.fixture(scope="module")
def angles():
    return sample_T_arrays(20_000, 123)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    if compiled is not None and os.environ.get("BASELGEOM_PURE") != "1":
        assert kernels.BACKEND == "cython"


def test_pure_env_var_forces_fallback():
    out = subprocess.run(
        [sys.executable, "-c", "from baselgeom import kernels; print(kernels.BACKEND)"],
        env={**os.environ, "BASELGEOM_PURE": "1"}, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("impl", [pure, compiled], ids=["python", "cython"])
class TestEachBackend:
    def test_boundary_height(self, impl):
        if impl is None:
            pytest.skip("compiled extension not built")
        x = np.array([1e-12, 0.1, math.log(2), 1.0, 10.0, 40.0])
        with mpmath.workdps(40):
            expected = [float(-mpmath.log(1 - mpmath.exp(-mpmath.mpf(v)))) for v in x.tolist()]
        np.testing.assert_allclose(impl.boundary_height(x), expected, rtol=1e-14)

    def test_det_G(self, impl, angles):
        if impl is None:
            pytest.skip("compiled extension not built")
        alpha, beta = angles
        keep = np.minimum.reduce([alpha, beta, math.pi - alpha - beta]) > 1e-3
        det = impl.det_G_analytic(alpha[keep], beta[keep])
        assert np.max(np.abs(det - 1.0)) < 1e-12

    def test_labels_cover_all_regions(self, impl, angles):
        if impl is None:
            pytest.skip("compiled extension not built")
        labels = impl.classify_angles(*angles, 1e-9)
        assert set(np.unique(labels).tolist()) <= {0, 1, 2, 3}
        assert all(np.count_nonzero(labels == k) > 5000 for k in range(3))

    def test_pile_heights(self, impl):
        if impl is None:
            pytest.skip("compiled extension not built")
        x = np.geomspace(0.01, 3.0, 50)
        for n in (1, 3, 8):
            expected = [math.fsum(math.exp(-k * v) / k for k in range(1, n + 1)) for v in x.tolist()]
            np.testing.assert_allclose(impl.pile_heights(x, n), expected, rtol=1e-14)


@needs_compiled
class TestParity:
    def test_boundary_height(self):
        x = np.geomspace(1e-14, 50.0, 5000)
        np.testing.assert_allclose(compiled.boundary_height(x), pure.boundary_height(x), rtol=4e-16, atol=0)

    def test_log_sides(self, angles):
        for a, b in zip(compiled.log_sides(*angles), pure.log_sides(*angles)):
            np.testing.assert_allclose(a, b, rtol=1e-14, atol=1e-15)

    def test_det_G_analytic(self, angles):
        alpha, beta = angles
        keep = np.minimum.reduce([alpha, beta, math.pi - alpha - beta]) > 1e-6
        np.testing.assert_allclose(compiled.det_G_analytic(alpha[keep], beta[keep]),
                                   pure.det_G_analytic(alpha[keep], beta[keep]), atol=1e-13)

    def test_fd_det_G(self, angles):
        alpha, beta = angles
        keep = np.minimum.reduce([alpha, beta, math.pi - alpha - beta]) > 1e-2
        a, b = alpha[keep][:2000], beta[keep][:2000]
        h = np.full(a.shape, 1e-4)
        np.testing.assert_allclose(compiled.fd_det_G(a, b, h), pure.fd_det_G(a, b, h), atol=1e-9)

    def test_classify(self, angles):
        assert np.array_equal(compiled.classify_angles(*angles, 1e-9), pure.classify_angles(*angles, 1e-9))
        x, y = pure.log_sides(*angles)
        assert np.array_equal(compiled.classify_log_sides(x, y, 1e-9), pure.classify_log_sides(x, y, 1e-9))

    def test_classify_ties(self):
        third = math.pi / 3
        alpha = np.array([third, 0.5, third, math.pi / 2, 2.0])
        beta = np.array([third, 0.5, math.pi / 3 - 0.2, 0.2, 2.0])
        assert np.array_equal(compiled.classify_angles(alpha, beta, 1e-9), pure.classify_angles(alpha, beta, 1e-9))

    def test_count_below_boundary(self):
        rng = np.random.default_rng(0)
        pts = rng.random((100_000, 2)) * 5
        assert compiled.count_below_boundary(pts[:, 0], pts[:, 1]) == pure.count_below_boundary(pts[:, 0], pts[:, 1])

    def test_pile_heights(self):
        x = np.geomspace(1e-3, 5.0, 1000)
        for n in (1, 2, 8, 30):
            np.testing.assert_allclose(compiled.pile_heights(x, n), pure.pile_heights(x, n), rtol=1e-14)
