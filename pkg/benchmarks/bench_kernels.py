"""Time the compiled kernels against the numpy fallback.

Usage:  python benchmarks/bench_kernels.py [--size N] [--repeat R]
"""

from __future__ import annotations

import argparse
import math
import timeit

import numpy as np

from baselgeom import _kernels_py as pure
from baselgeom.regions import sample_T_arrays

try:
    from baselgeom import _kernels as compiled
except ImportError:
    compiled = None


def cases(size: int):
    alpha, beta = sample_T_arrays(size, 0)
    dist = np.minimum.reduce([alpha, beta, math.pi - alpha - beta])
    keep = dist > 1e-6
    alpha, beta, dist = alpha[keep], beta[keep], dist[keep]
    h = dist * np.finfo(np.float64).eps ** (1 / 7)
    x, y = pure.log_sides(alpha, beta)
    pts = np.random.default_rng(1).random((size, 2)) * 20.0
    grid = np.geomspace(1e-3, 3.0, size)
    return {
        "boundary_height": lambda m: m.boundary_height(grid),
        "log_sides": lambda m: m.log_sides(alpha, beta),
        "det_G_analytic": lambda m: m.det_G_analytic(alpha, beta),
        "fd_det_G": lambda m: m.fd_det_G(alpha, beta, h),
        "classify_angles": lambda m: m.classify_angles(alpha, beta, 1e-9),
        "classify_log_sides": lambda m: m.classify_log_sides(x, y, 1e-9),
        "count_below_boundary": lambda m: m.count_below_boundary(pts[:, 0], pts[:, 1]),
        "pile_heights(8)": lambda m: m.pile_heights(grid, 8),
    }


def best_of(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=200_000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"array size {args.size}, best of {args.repeat}")
    print(f"{'kernel':<22}{'numpy ms':>10}{'cython ms':>11}{'speedup':>9}")
    for name, run in cases(args.size).items():
        t_py = best_of(lambda: run(pure), args.repeat)
        if compiled is None:
            print(f"{name:<22}{1e3 * t_py:>10.2f}{'n/a':>11}{'':>9}")
            continue
        t_c = best_of(lambda: run(compiled), args.repeat)
        print(f"{name:<22}{1e3 * t_py:>10.2f}{1e3 * t_c:>11.2f}{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
