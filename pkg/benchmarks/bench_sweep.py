#!/usr/bin/env python3
"""Time the sweep kernel's grid argmax with the compiled backend against the
pure-Python fallback, then one end-to-end cone estimate with the active
backend.

Usage: python benchmarks/bench_sweep.py [--samples N] [--repeats K]
"""

import argparse
import math
import time

import numpy as np

from planarlp import _sweep_fallback
from planarlp import enumerate_vertices, load_lp, stable_interval_by_sweep
from planarlp.oracle import sweep_backend

try:
    from planarlp import _sweep_kernel
except ImportError:
    _sweep_kernel = None


def polygon(n, rng):
    # convex n-gon: points on an ellipse with jittered radii, sorted by angle
    angles = np.sort(rng.uniform(-math.pi, math.pi, n))
    r = rng.uniform(50, 100, n)
    return r * np.cos(angles) * 1.5, r * np.sin(angles)


def time_grid(mod, phis, vx, vy, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        mod.argmax_grid(phis, vx, vy, 1e-9)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=360_000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(7)
    phis = np.linspace(-math.pi, math.pi, args.samples)

    print(f"grid argmax over {args.samples} angles, best of {args.repeats} runs")
    print(f"{'vertices':>10} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for n in (5, 16, 64, 256):
        vx, vy = polygon(n, rng)
        t_py = time_grid(_sweep_fallback, phis, vx, vy, args.repeats)
        if _sweep_kernel is None:
            print(f"{n:>10} {t_py:>11.4f}s {'n/a':>12} {'n/a':>9}")
            continue
        t_c = time_grid(_sweep_kernel, phis, vx, vy, args.repeats)
        same = np.array_equal(
            _sweep_fallback.argmax_grid(phis, vx, vy, 1e-9),
            _sweep_kernel.argmax_grid(phis, vx, vy, 1e-9),
        )
        flag = "" if same else "  (!) backends disagree"
        print(f"{n:>10} {t_py:>11.4f}s {t_c:>11.4f}s {t_py / t_c:>8.1f}x{flag}")

    lp = load_lp("fixtures/paper.lp")
    region = enumerate_vertices(lp)
    vertex = region.vertices[2]
    t0 = time.perf_counter()
    stable_interval_by_sweep(region, vertex, math.radians(0.005))
    dt = time.perf_counter() - t0
    print(
        f"\nend-to-end cone estimate at 0.005 deg step "
        f"({sweep_backend()} backend): {dt:.4f}s"
    )


if __name__ == "__main__":
    main()
