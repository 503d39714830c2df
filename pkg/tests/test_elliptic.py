"""Elliptic kernel: AGM, Carlson R_F, incomplete F, Jacobi sn, mu."""
import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

import quadpot as qp
from quadpot.errors import DomainError, PoleProximityError

# frozen mpmath reference values
F_R05 = 0.30372705128707346 + 0.10572140989807589j   # F(0.5, arcsin(0.3+0.1i))
F_R06 = 0.402152229463293 + 0.22124366788526074j     # F(0.6, arcsin(0.4+0.2i))
SN_A = 0.69047964385616253 + 0.3012195908411126j     # sn(0.7+0.4i, 0.45)
SN_B = -1.1033960640950121 + 0.24414079013610161j    # sn(-1.2+0.9i, 0.8)
MU_09 = 1.1396666442344295


def K_by_quadrature(r):
    """Independent oracle: adaptive quadrature of the defining integral
    (amplitude form, which is smooth)."""
    val, err = quad(lambda th: 1.0 / math.sqrt(1.0 - (r * math.sin(th)) ** 2),
                    0.0, math.pi / 2.0, epsabs=1e-14, epsrel=1e-14, limit=200)
    assert err < 1e-12
    return val


def F_by_contour_quadrature(r, z):
    """Independent oracle: straight-segment quadrature of the defining
    integral.  Each factor's principal square root is continuous along the
    segment for the arguments used here (|z| < 1.3, off the real axis)."""
    def point(s):
        t = z * s
        return z / (cmath.sqrt(1.0 - t * t) * cmath.sqrt(1.0 - (r * t) ** 2))
    re, ere = quad(lambda s: point(s).real, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
    im, eim = quad(lambda s: point(s).imag, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=300)
    assert max(ere, eim) < 1e-11
    return complex(re, im)


def gauss_2f1_half(x):
    """2F1(1/2, 1/2; 1; x) by direct series, x <= 0.5."""
    term, total = 1.0, 1.0
    for n in range(400):
        term *= ((n + 0.5) / (n + 1.0)) ** 2 * x
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return total


class TestCompleteK:
    def test_degenerate_zero(self):
        assert qp.complete_K(0.0) == pytest.approx(math.pi / 2.0, abs=1e-15)

    def test_symmetric_point(self):
        r = 1.0 / math.sqrt(2.0)
        rp = math.sqrt(1.0 - r * r)
        assert qp.complete_K(r) == pytest.approx(qp.complete_K(rp), abs=1e-15)

    def test_against_quadrature_08(self):
        assert qp.complete_K(0.8) == pytest.approx(K_by_quadrature(0.8), abs=1e-12)

    def test_against_quadrature_grid(self):
        for r in np.linspace(0.01, 0.99, 25):
            assert abs(qp.complete_K(r) - K_by_quadrature(r)) < 1e-11

    def test_hypergeometric_consistency(self):
        for r in np.linspace(0.05, math.sqrt(0.5), 12):
            ref = 0.5 * math.pi * gauss_2f1_half(r * r)
            assert abs(qp.complete_K(r) - ref) < 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            qp.complete_K(1.0)
        with pytest.raises(DomainError):
            qp.complete_K(-0.1)

    def test_pair_consistency(self):
        K, Kp = qp.complete_K_pair(0.37)
        assert K == pytest.approx(qp.complete_K(0.37), abs=1e-15)
        assert Kp == pytest.approx(qp.complete_K(math.sqrt(1 - 0.37 ** 2)), rel=1e-15)


class TestCarlsonRF:
    def test_all_equal(self):
        assert qp.carlson_RF(1, 1, 1) == pytest.approx(1.0, abs=1e-14)
        for x in (2.0, 0.3 + 0.4j, 5 - 1j):
            assert qp.carlson_RF(x, x, x) == pytest.approx(1.0 / cmath.sqrt(x), rel=1e-13)

    def test_complete_reduction(self):
        assert qp.carlson_RF(0, 1, 1) == pytest.approx(math.pi / 2.0, abs=1e-14)
        r = 0.55
        assert qp.carlson_RF(0, 1 - r * r, 1) == pytest.approx(qp.complete_K(r), rel=1e-14)

    def test_symmetry(self):
        v = qp.carlson_RF(0.3 + 0.1j, 2.0, 1.0)
        assert qp.carlson_RF(2.0, 1.0, 0.3 + 0.1j) == pytest.approx(v, rel=1e-14)

    def test_homogeneity(self):
        x, y, z = 0.7 + 0.2j, 1.1, 2.3 - 0.4j
        k = 1.7
        assert qp.carlson_RF(k * x, k * y, k * z) == pytest.approx(
            qp.carlson_RF(x, y, z) / math.sqrt(k), rel=1e-13)

    def test_spec_point_against_contour(self):
        z, r = 0.3 + 0.1j, 0.5
        mine = z * qp.carlson_RF(1 - z * z, 1 - (r * z) ** 2, 1)
        assert abs(mine - F_by_contour_quadrature(r, z)) < 1e-11
        assert abs(mine - F_R05) < 1e-14

    def test_branch_position_errors(self):
        with pytest.raises(DomainError):
            qp.carlson_RF(-1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            qp.carlson_RF(0.0, 0.0, 1.0)


class TestIncompleteF:
    def test_trivial(self):
        assert qp.incomplete_F(0.5, 0) == 0
        assert qp.incomplete_F(0.7, 1.0) == pytest.approx(qp.complete_K(0.7), rel=1e-14)

    def test_complex_oracle(self):
        got = qp.incomplete_F(0.6, 0.4 + 0.2j)
        assert abs(got - F_by_contour_quadrature(0.6, 0.4 + 0.2j)) < 1e-11
        assert abs(got - F_R06) < 1e-14

    def test_random_upper_half_plane_vs_quadrature(self):
        rng = np.random.default_rng(20240811)
        for _ in range(50):
            r = rng.uniform(0.2, 0.9)
            z = complex(rng.uniform(-0.85, 0.85), rng.uniform(0.05, 0.85))
            assert abs(qp.incomplete_F(r, z) - F_by_contour_quadrature(r, z)) < 1e-10

    def test_oddness_and_conjugation(self):
        r = 0.45
        for z in (0.3 + 0.4j, -0.2 + 0.7j, 0.9 + 0.05j, 0.5):
            F = qp.incomplete_F(r, z)
            assert qp.incomplete_F(r, -z) == pytest.approx(-F, rel=1e-13)
            zc = complex(z).conjugate()
            assert qp.incomplete_F(r, zc) == pytest.approx(F.conjugate(), rel=1e-13)

    def test_on_cut_between_branch_points(self):
        # on (1, 1/r) the upper-side limit has constant real part K(r)
        r = 0.55
        K, Kp = qp.complete_K_pair(r)
        for x in np.linspace(1.05, 1.0 / r - 0.05, 7):
            F = qp.incomplete_F(r, x)
            assert F.real == pytest.approx(K, abs=1e-12)
            assert F.imag > 0
        # consistency with an explicitly complex point just above the cut
        x = 1.3
        lifted = qp.incomplete_F(r, complex(x, 1e-9))
        assert abs(lifted - qp.incomplete_F(r, x)) < 1e-7

    def test_on_cut_beyond_second_branch_point(self):
        r = 0.55
        K, Kp = qp.complete_K_pair(r)
        assert qp.incomplete_F(r, 1.0 / r) == pytest.approx(complex(K, Kp), rel=1e-13)
        for x in (1.0 / r + 0.5, 5.0, 40.0):
            F = qp.incomplete_F(r, x)
            assert F.imag == pytest.approx(Kp, abs=1e-12)
            assert 0.0 < F.real < K

    def test_negative_real_axis_is_imaginary_free(self):
        # psi uses sqrt(z) with z < 0, giving purely imaginary arguments here
        r = 0.6
        F = qp.incomplete_F(r, 0.7j)
        assert F.real == 0.0


class TestJacobiSN:
    def test_zero_and_quarter_period(self):
        lam = 0.45
        K = qp.complete_K(lam)
        assert qp.jacobi_sn(0.0, lam) == 0
        assert qp.jacobi_sn(K, lam) == pytest.approx(1.0, abs=1e-12)

    def test_inverts_incomplete_integral(self):
        lam = 0.45
        z = math.sin(0.7)
        u = qp.incomplete_F(lam, z)
        assert qp.jacobi_sn(u, lam) == pytest.approx(z, abs=1e-13)

    def test_roundtrip_grid(self):
        for lam in np.linspace(0.1, 0.9, 9):
            for phi in np.linspace(0.1, math.pi / 2 - 0.1, 9):
                z = math.sin(phi)
                got = qp.jacobi_sn(qp.incomplete_F(lam, z), lam)
                assert abs(got - z) < 1e-11

    def test_complex_values_frozen(self):
        assert abs(qp.jacobi_sn(0.7 + 0.4j, 0.45) - SN_A) < 1e-13
        assert abs(qp.jacobi_sn(-1.2 + 0.9j, 0.8) - SN_B) < 1e-13

    def test_pole_guard(self):
        lam = 0.6
        K, Kp = qp.complete_K_pair(lam)
        with pytest.raises(PoleProximityError):
            qp.jacobi_sn(complex(0.0, Kp), lam)
        with pytest.raises(PoleProximityError):
            qp.jacobi_sn(complex(2.0 * K, Kp + 1e-12), lam)

    def test_array_agrees_with_scalar(self):
        lam = 0.37
        us = np.array([0.3, 0.5 + 0.2j, -1.1 + 0.8j, 2.0 + 1.5j])
        arr = qp.jacobi_sn_array(us, lam)
        for u, v in zip(us, arr):
            assert abs(qp.jacobi_sn(complex(u), lam) - v) < 1e-14

    def test_array_flags_poles_with_nan(self):
        lam = 0.37
        K, Kp = qp.complete_K_pair(lam)
        arr = qp.jacobi_sn_array(np.array([0.4, 1j * Kp]), lam)
        assert not np.isnan(arr[0])
        assert np.isnan(arr[1])


class TestMu:
    def test_symmetric_point(self):
        assert qp.mu_groetzsch(1.0 / math.sqrt(2.0)) == pytest.approx(math.pi / 2, abs=1e-14)

    def test_functional_identity(self):
        for r in np.linspace(0.05, 0.95, 19):
            prod = qp.mu_groetzsch(r) * qp.mu_groetzsch(math.sqrt(1 - r * r))
            assert abs(prod - math.pi ** 2 / 4.0) < 1e-12

    def test_frozen_value(self):
        assert qp.mu_groetzsch(0.9) == pytest.approx(MU_09, abs=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            qp.mu_groetzsch(0.0)
        with pytest.raises(DomainError):
            qp.mu_groetzsch(1.0)


def test_elliptic_modulus_type():
    m = qp.EllipticModulus.from_r(0.3)
    assert m.rprime == pytest.approx(math.sqrt(1 - 0.09), rel=1e-16)
    with pytest.raises(DomainError):
        qp.EllipticModulus.from_r(1.2)
