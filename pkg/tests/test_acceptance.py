"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""
import itertools
import math
import time

import numpy as np
import pytest

import quadpot as qp

from conftest import (EP1_U, EP1_VERTICES, EP2_U, EP2_VERTICES,
                      REFERENCE_TABLE)


def report(num, name, ok, detail):
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {name} ({detail})")
    assert ok, f"criterion {num} failed: {name} ({detail})"


def dist_to_segment(w, a, b):
    d = b - a
    s = ((w - a) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(w - (a + s * d))


def test_criterion_1_reference_table():
    """Nine reference quadrilaterals match the published 16-digit values."""
    start = time.perf_counter()
    worst = 0.0
    for A, B, expected in REFERENCE_TABLE:
        sol = qp.u_infinity(qp.Quadrilateral(1, 0, B, A))
        worst = max(worst, abs(sol.u_inf - expected))
    elapsed = time.perf_counter() - start
    report(1, "reference-table reproduction",
           worst <= 1e-8 and elapsed <= 60.0,
           f"worst |diff| = {worst:.2e} <= 1e-8, runtime {elapsed:.1f}s <= 60s")


def test_criterion_2_example_values(ep1_solution, ep2_solution):
    """The two worked examples match their published 6-decimal values."""
    d1 = abs(ep1_solution.u_inf - 0.471813)
    d2 = abs(ep2_solution.u_inf - 0.334052)
    report(2, "example golden values", d1 <= 5e-7 and d2 <= 5e-7,
           f"|u1 - 0.471813| = {d1:.2e}, |u2 - 0.334052| = {d2:.2e}, tol 5e-7")


def test_criterion_3_symmetry_exactness(square_solution):
    """Reflection-symmetric inputs give u(oo) = 1/2 to near machine level."""
    d_square = abs(square_solution.u_inf - 0.5)
    trap = qp.u_infinity(qp.Quadrilateral(1, -1, -2 + 2j, 2 + 2j))
    d_trap = abs(trap.u_inf - 0.5)
    d_disk = abs(qp.disk_u_infinity(qp.disk_setup(0.8, math.pi - 0.8)) - 0.5)
    report(3, "symmetry exactness",
           d_square <= 1e-10 and d_trap <= 1e-10 and d_disk <= 1e-12,
           f"square {d_square:.1e} <= 1e-10, trapezoid {d_trap:.1e} <= 1e-10, "
           f"disk {d_disk:.1e} <= 1e-12")


def test_criterion_4_closure(table_solutions, ep1_solution, ep2_solution):
    """f(oo) reproduces the fourth vertex for every solved case."""
    worst = 0.0
    for sol in list(table_solutions) + [ep1_solution, ep2_solution]:
        w = qp.map_at_infinity(sol.params, sol.quad)
        worst = max(worst, abs(w - sol.quad.z4) / sol.quad.diameter())
    report(4, "closure at infinity", worst <= 1e-8,
           f"worst |f(oo) - z4|/diam = {worst:.2e} <= 1e-8")


def test_criterion_5_pole_residual_and_uniqueness(table_solutions,
                                                  ep1_solution, ep2_solution):
    """Residue condition <= 1e-10 everywhere; unique admissible cubic root."""
    worst = 0.0
    for sol in list(table_solutions) + [ep1_solution, ep2_solution]:
        p = sol.params
        worst = max(worst, qp.eqz0_residual(p.angles, p.t, p.z0))

    vals = [0.2, 0.35, 0.5, 0.65, 0.8]
    ts = [1.3, 2.0, 3.7, 8.0, 25.0]
    grid = []
    for al, be, ga in itertools.product(vals, repeat=3):
        de = 2.0 - al - be - ga
        if 0.05 < de < 0.95:
            for t in ts:
                grid.append((qp.ExteriorAngles(al, be, ga, de), t))
    count = 0
    for ang, t in grid[:100]:
        qp.solve_pole(ang, t)  # raises unless exactly one admissible root
        count += 1
    report(5, "pole residual and root uniqueness",
           worst <= 1e-10 and count == 100,
           f"worst residual {worst:.2e} <= 1e-10, unique root on {count}/100 grid points")


def test_criterion_6_elliptic_kernel():
    """sn/F roundtrip, Carlson F vs quadrature, mu functional identity."""
    worst_rt = 0.0
    for lam in np.linspace(0.1, 0.9, 9):
        for phi in np.linspace(0.1, math.pi / 2 - 0.1, 9):
            z = math.sin(phi)
            worst_rt = max(worst_rt,
                           abs(qp.jacobi_sn(qp.incomplete_F(lam, z), lam) - z))

    from test_elliptic import F_by_contour_quadrature
    rng = np.random.default_rng(20240811)
    worst_f = 0.0
    for _ in range(50):
        r = rng.uniform(0.2, 0.9)
        z = complex(rng.uniform(-0.85, 0.85), rng.uniform(0.05, 0.85))
        worst_f = max(worst_f,
                      abs(qp.incomplete_F(r, z) - F_by_contour_quadrature(r, z)))

    worst_mu = max(abs(qp.mu_groetzsch(r) * qp.mu_groetzsch(math.sqrt(1 - r * r))
                       - math.pi ** 2 / 4.0)
                   for r in np.linspace(0.05, 0.95, 19))
    report(6, "elliptic kernel properties",
           worst_rt <= 1e-11 and worst_f <= 1e-10 and worst_mu <= 1e-12,
           f"roundtrip {worst_rt:.2e} <= 1e-11, F vs quadrature {worst_f:.2e} <= 1e-10, "
           f"mu identity {worst_mu:.2e} <= 1e-12")


def test_criterion_7_disk_cross_ratio_consistency():
    """Closed-form modulus equals the cross-ratio modulus, 20 random cases."""
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(20):
        alpha = rng.uniform(0.1, 2.5)
        beta = rng.uniform(alpha + 0.2, min(alpha + 2.6, 3.1))
        d = qp.disk_setup(alpha, beta)
        p = [complex(math.cos(th), math.sin(th))
             for th in (beta, alpha, -alpha, -beta)]
        worst = max(worst, abs(qp.cross_ratio_modulus(*p) - d.h))
    report(7, "disk / cross-ratio consistency", worst <= 1e-10,
           f"worst |h_chain - h_crossratio| = {worst:.2e} <= 1e-10")


def test_criterion_8_level_curve_geometry(ep1_solution):
    """Auto levels: endpoints on the correct sides, blow-up of the split
    curve, disjoint curves."""
    sol = ep1_solution
    q = sol.quad
    levels = [0.1, 0.2, 0.3, 0.4, sol.u_inf, 0.6, 0.7, 0.8, 0.9]
    curves = [qp.trace_level(sol, c, 400) for c in levels]

    worst_end = 0.0
    for lc in curves:
        w_first = lc.segments[0][0][1]
        w_last = lc.segments[-1][-1][1]
        worst_end = max(worst_end,
                        dist_to_segment(w_first, q.z1, q.z2),
                        dist_to_segment(w_last, q.z3, q.z4))

    split = curves[4]
    peak = max(abs(w) for _, w in split.points)

    min_gap = math.inf
    clouds = [np.array([w for _, w in lc.points]) for lc in curves]
    for i in range(len(clouds)):
        for j in range(i + 1, len(clouds)):
            gap = np.min(np.abs(clouds[i][:, None] - clouds[j][None, :]))
            min_gap = min(min_gap, gap)

    report(8, "level-curve geometry",
           worst_end <= 1e-6 and peak > 1e4 and min_gap > 0.0,
           f"worst endpoint-to-side {worst_end:.2e} <= 1e-6, "
           f"split-curve peak |w| = {peak:.2e} > 1e4, "
           f"min inter-curve gap {min_gap:.2e} > 0")
