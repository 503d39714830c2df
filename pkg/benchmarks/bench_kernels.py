#!/usr/bin/env python3
"""Benchmark the compiled integrand kernel against the numpy fallback.

Two views:
* microbenchmark of the weighted integrand sum at typical quadrature sizes;
* end-to-end wall time for a full solve plus one traced level curve.

Run after an in-place build (``pip install -e . --no-build-isolation``).
"""
import time

import numpy as np

import quadpot
from quadpot import _kernels as kernels


def _micro_case(n, rng):
    zeta = rng.uniform(0.05, 0.95, n) + 1j * rng.uniform(0.01, 2.0, n)
    w = rng.uniform(0.0, 1.0, n)
    args = (zeta, w, 0.47, 0.27, 0.64, 1.97, 1.2 + 1.3j)
    return args


def bench_micro(reps=2000):
    rng = np.random.default_rng(7)
    print(f"{'nodes':>7} {'pure us/call':>14} {'compiled us/call':>18} {'speedup':>9}")
    for n in (32, 128, 512, 2048):
        args = _micro_case(n, rng)
        times = {}
        for name, mod in sorted(kernels.available_backends().items()):
            mod.integrand_weighted_sum(*args)  # warm up
            t0 = time.perf_counter()
            for _ in range(reps):
                mod.integrand_weighted_sum(*args)
            times[name] = (time.perf_counter() - t0) / reps * 1e6
        pure = times.get("pure", float("nan"))
        comp = times.get("compiled", float("nan"))
        speedup = pure / comp if comp == comp else float("nan")
        print(f"{n:>7} {pure:>14.2f} {comp:>18.2f} {speedup:>8.1f}x")


def bench_end_to_end():
    q = quadpot.Quadrilateral(1, 0, -1 + 2j, 7 + 5j)
    # warm the quadrature-node caches so neither backend pays them
    warm = quadpot.u_infinity(q)
    quadpot.trace_level(warm, warm.u_inf, 400)
    print(f"\n{'backend':>10} {'solve ms':>10} {'trace ms':>10}")
    for name in sorted(kernels.available_backends()):
        old = kernels.use_backend(name)
        try:
            t0 = time.perf_counter()
            sol = quadpot.u_infinity(q)
            t1 = time.perf_counter()
            quadpot.trace_level(sol, sol.u_inf, 400)
            t2 = time.perf_counter()
            print(f"{name:>10} {1e3 * (t1 - t0):>10.1f} {1e3 * (t2 - t1):>10.1f}")
        finally:
            kernels.use_backend(old)


if __name__ == "__main__":
    print(f"active backend: {quadpot.backend_name()}; "
          f"available: {sorted(kernels.available_backends())}")
    bench_micro()
    bench_end_to_end()
