"""Elliptic-integral and Jacobi-function kernel.

Everything downstream reduces to four primitives:

* ``complete_K`` -- the complete elliptic integral of the first kind,
  K(r) = int_0^1 dx / sqrt((1-x^2)(1-r^2 x^2)), by the arithmetic-geometric
  mean iteration (modulus convention: the argument is r, not m = r^2).
* ``carlson_RF`` -- Carlson's symmetric integral R_F by the duplication
  algorithm, valid for complex arguments off the negative real axis
  (Carlson, Numer. Algorithms 10 (1995)).
* ``incomplete_F`` -- the incomplete integral of the first kind with the
  sine of the amplitude as argument: F = z * R_F(1-z^2, 1-r^2 z^2, 1).
  Real arguments beyond the branch points at 1 and 1/r are evaluated as
  limits from the upper half plane, the branch the mapping modules need.
* ``jacobi_sn`` -- the Jacobi sine at complex argument, assembled from
  real-argument sn/cn/dn with moduli (lambda, lambda') via the standard
  imaginary-argument decomposition (Abramowitz & Stegun 16.21.1).
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ellipj

from .errors import DomainError, PoleProximityError

_AGM_TOL = 1e-17
_RF_ERRTOL = 1e-17
_SN_POLE_GUARD = 1e-10


@dataclass(frozen=True)
class EllipticModulus:
    """A modulus r in (0,1) together with its complement r' = sqrt(1-r^2)."""

    r: float
    rprime: float

    @classmethod
    def from_r(cls, r):
        if not 0.0 < r < 1.0:
            raise DomainError(f"modulus must lie in (0,1), got {r}")
        return cls(float(r), math.sqrt((1.0 - r) * (1.0 + r)))


def _agm(a, b):
    for _ in range(64):
        if abs(a - b) <= _AGM_TOL * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_K(r):
    """K(r) for 0 <= r < 1 via AGM: K = pi / (2 agm(1, r'))."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"complete_K requires 0 <= r < 1, got {r}")
    return math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - r) * (1.0 + r))))


def complete_K_pair(r):
    """(K(r), K'(r)) without cancellation: K'(r) = pi / (2 agm(1, r))."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"complete_K_pair requires 0 < r < 1, got {r}")
    K = math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - r) * (1.0 + r))))
    Kp = math.pi / (2.0 * _agm(1.0, r))
    return K, Kp


def mu_groetzsch(r):
    """Groetzsch modulus function mu(r) = pi K(r') / (2 K(r))."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"mu_groetzsch requires 0 < r < 1, got {r}")
    K, Kp = complete_K_pair(r)
    return math.pi * Kp / (2.0 * K)


def inverse_mu(y):
    """Solve mu(r) = y for r in (0,1).  mu is strictly decreasing."""
    if not y > 0.0:
        raise DomainError(f"inverse_mu requires a positive argument, got {y}")
    lo, hi = 1e-15, 1.0 - 1e-15
    # mu(lo) is huge, mu(hi) tiny; plain bisection is plenty here (the result
    # only seeds a bracket search).
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if mu_groetzsch(mid) > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def carlson_RF(x, y, z):
    """Carlson's R_F(x, y, z) by duplication, complex arguments allowed.

    Arguments must avoid the negative real axis (the cut of the principal
    square root) and at most one of them may be zero.
    """
    x, y, z = complex(x), complex(y), complex(z)
    args = (x, y, z)
    if sum(1 for a in args if a == 0) > 1:
        raise DomainError("carlson_RF: at most one argument may be zero")
    for a in args:
        if a.imag == 0.0 and a.real < 0.0:
            raise DomainError(f"carlson_RF: argument {a} lies on the negative real axis")

    A0 = (x + y + z) / 3.0
    Q = (3.0 * _RF_ERRTOL) ** (-1.0 / 6.0) * max(abs(A0 - x), abs(A0 - y), abs(A0 - z))
    A = A0
    xm, ym, zm = x, y, z
    scale = 1.0
    for _ in range(80):
        if scale * Q < abs(A):
            break
        sx, sy, sz = cmath.sqrt(xm), cmath.sqrt(ym), cmath.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        A = 0.25 * (A + lam)
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        scale *= 0.25
    X = scale * (A0 - x) / A
    Y = scale * (A0 - y) / A
    Z = -(X + Y)
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    series = 1.0 - E2 / 10.0 + E3 / 14.0 + E2 * E2 / 24.0 - 3.0 * E2 * E3 / 44.0
    return series / cmath.sqrt(A)


def _check_modulus(r):
    if not 0.0 < r < 1.0:
        raise DomainError(f"modulus must lie in (0,1), got {r}")


def incomplete_F(r, z):
    """F(r, arcsin z) = int_0^z dt / sqrt((1-t^2)(1-r^2 t^2)).

    ``z`` is the sine of the amplitude.  Off the real axis the value comes
    from R_F on the principal branch; for real z with \\|z\\| > 1 the limit
    from the upper half plane is returned, so that on the segments (1, 1/r)
    and (1/r, oo) the known boundary values F = K + i*(real) and
    F = i*K' + (real) hold exactly.
    """
    _check_modulus(r)
    z = complex(z)
    if z == 0:
        return 0j
    if z.imag == 0.0:
        x = z.real
        if x < 0.0:
            return -incomplete_F(r, -x)
        if x <= 1.0:
            return complex(x * carlson_RF(1.0 - x * x, 1.0 - (r * x) ** 2, 1.0))
        K, Kp = complete_K_pair(r)
        rp = math.sqrt((1.0 - r) * (1.0 + r))
        if x < 1.0 / r:
            # upper-side limit along the cut (1, 1/r): real part locks to K
            s = math.sqrt((x * x - 1.0) / (x * x * rp * rp))
            return complex(K, (incomplete_F(rp, s)).real)
        if x == 1.0 / r:
            return complex(K, Kp)
        # upper-side limit beyond 1/r: imaginary part locks to K'
        s = 1.0 / (r * x)
        return complex((incomplete_F(r, s)).real, Kp)
    if z.imag < 0.0:
        return incomplete_F(r, z.conjugate()).conjugate()
    return z * carlson_RF(1.0 - z * z, 1.0 - (r * z) ** 2, 1.0)


def _sn_pole_distance(u, K, Kp):
    # poles of sn sit at i K' modulo the period lattice (2K, 2i K')
    dx = u.real - 2.0 * K * round(u.real / (2.0 * K))
    dy = (u.imag - Kp) - 2.0 * Kp * round((u.imag - Kp) / (2.0 * Kp))
    return math.hypot(dx, dy)


def jacobi_sn(u, lam):
    """Jacobi sine sn(u, lambda) at complex u (modulus convention)."""
    _check_modulus(lam)
    u = complex(u)
    m = lam * lam
    K, Kp = complete_K_pair(lam)
    if _sn_pole_distance(u, K, Kp) < _SN_POLE_GUARD:
        raise PoleProximityError(f"sn argument {u} is within {_SN_POLE_GUARD} of a pole")
    s, c, d, _ = ellipj(u.real, m)
    if u.imag == 0.0:
        return complex(s)
    s1, c1, d1, _ = ellipj(u.imag, 1.0 - m)
    den = c1 * c1 + m * (s * s1) ** 2
    return complex(s * d1, c * d * s1 * c1) / den


def jacobi_sn_array(u, lam):
    """Vectorized ``jacobi_sn``; entries near a pole yield ``nan+nanj``.

    Used by the level tracers, which handle the flagged entries themselves
    instead of aborting a whole curve.
    """
    _check_modulus(lam)
    u = np.asarray(u, dtype=np.complex128)
    m = lam * lam
    K, Kp = complete_K_pair(lam)
    x = u.real
    y = u.imag
    dx = x - 2.0 * K * np.round(x / (2.0 * K))
    dy = (y - Kp) - 2.0 * Kp * np.round((y - Kp) / (2.0 * Kp))
    near_pole = np.hypot(dx, dy) < _SN_POLE_GUARD
    s, c, d, _ = ellipj(x, m)
    s1, c1, d1, _ = ellipj(y, 1.0 - m)
    den = c1 * c1 + m * (s * s1) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        out = (s * d1 + 1j * (c * d * s1 * c1)) / den
    out = np.where(near_pole, complex(np.nan, np.nan), out)
    return out
