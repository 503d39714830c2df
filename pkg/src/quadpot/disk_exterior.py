"""Closed-form potential for the exterior of the unit disk.

The quadrilateral is the disk exterior with vertices e^{i beta}, e^{i alpha},
e^{-i alpha}, e^{-i beta}, 0 < alpha < beta < pi.  A chain of two Moebius
maps and one elliptic integral solves it exactly:

    T(z) = (z - a) / (1 - a z),          a from tan(alpha/2) tan(beta/2),
    S(w) = (w - i) / (sqrt(lambda) (1 - i w)),
    g(omega) = F(lambda, arcsin omega) / (2 K(lambda)) + 1/2,

with cos(gamma) = sin((beta-alpha)/2)/sin((beta+alpha)/2) and
lambda = 1 + 2 tan^2(gamma) - 2 tan(gamma) sqrt(1 + tan^2(gamma)) in (0,1).
S o T sends the four vertices to -1, 1, 1/lambda, -1/lambda and g finishes
onto the rectangle [0,1] x [0,h] with h = K'(lambda) / (2 K(lambda)).

The potential is Re g(S(T(z))); its value at infinity is attained at
omega_0 = -(1/sqrt(lambda)) (1 + i a)/(a + i).  Because the whole chain has
a closed form, this module doubles as an independent oracle for the
general pipeline's elliptic and cross-ratio conventions.
"""
import math
from dataclasses import dataclass

import numpy as np

from .elliptic import complete_K_pair, incomplete_F, jacobi_sn_array
from .errors import DomainError, NumericalError
from .potential import LevelCurve

_DEGENERACY_TOL = 1e-8
_LEVEL_MATCH_TOL = 1e-9
_SPLIT_GAP_FRACTION = 2e-5


@dataclass(frozen=True)
class DiskQuadrilateral:
    """Vertex angles (alpha, beta) and the derived chain constants."""

    alpha: float
    beta: float
    a: float
    gamma: float
    lam: float
    h: float


def disk_setup(alpha, beta):
    """Derive the Moebius/elliptic constants for vertex angles (alpha, beta)."""
    alpha, beta = float(alpha), float(beta)
    if not 0.0 < alpha < beta < math.pi:
        raise DomainError(f"need 0 < alpha < beta < pi, got ({alpha}, {beta})")
    if beta - alpha < _DEGENERACY_TOL:
        raise DomainError(f"vertices collapse: beta - alpha = {beta - alpha:.3e}")
    s = math.sqrt(math.tan(0.5 * alpha) * math.tan(0.5 * beta))
    a = (1.0 - s) / (1.0 + s)
    cg = math.sin(0.5 * (beta - alpha)) / math.sin(0.5 * (beta + alpha))
    if not cg < 1.0 - 1e-15:
        raise DomainError("configuration degenerates (gamma -> 0)")
    gamma = math.acos(cg)
    tg = math.tan(gamma)
    lam = 1.0 + 2.0 * tg * tg - 2.0 * tg * math.sqrt(1.0 + tg * tg)
    if not 0.0 < lam < 1.0:
        raise DomainError(f"elliptic modulus {lam} escaped (0,1)")
    K, Kp = complete_K_pair(lam)
    return DiskQuadrilateral(alpha=alpha, beta=beta, a=a, gamma=gamma, lam=lam,
                             h=Kp / (2.0 * K))


def vertex_images(d):
    """Images of the four vertices under S o T, in vertex order.

    Mathematically these are (-1, 1, 1/lambda, -1/lambda); computed from the
    Moebius maps directly rather than assumed.
    """
    rl = math.sqrt(d.lam)
    out = []
    for th in (d.beta, d.alpha, -d.alpha, -d.beta):
        z = complex(math.cos(th), math.sin(th))
        w = (z - d.a) / (1.0 - d.a * z)
        out.append((w - 1j) / (rl * (1.0 - 1j * w)))
    return tuple(out)


def disk_u_infinity(d):
    """Potential value at infinity, Re g(omega_0)."""
    rl = math.sqrt(d.lam)
    omega0 = -(1.0 / rl) * (1.0 + 1j * d.a) / (d.a + 1j)
    K, _ = complete_K_pair(d.lam)
    g0 = incomplete_F(d.lam, omega0) / (2.0 * K) + 0.5
    u0 = g0.real
    if not 0.0 < u0 < 1.0:
        raise NumericalError(f"u(infinity) = {u0} escaped (0,1)")
    return u0


def _moebius_back(d, omega):
    """Inverse chain T^{-1} o S^{-1}: half-plane point omega -> physical z."""
    rl = math.sqrt(d.lam)
    num = rl * (d.a - 1j) * omega + (1.0 - 1j * d.a)
    den = rl * (1.0 - 1j * d.a) * omega + (d.a - 1j)
    return num / den


def disk_trace_level(d, u0, n):
    """Trace the level curve u = u0, parametrized by xi in [0, K'(lambda)].

    The half-plane point is sn((2 u0 - 1) K(lambda) + i xi, lambda); the
    sweep over the full xi range covers both mirror halves of the curve
    (the second half is the complex conjugate of the first).  When u0 is the
    level through infinity the range is split around xi = K'/2.  Isolated sn
    poles (removable in the Moebius chain) map to the finite limit point.
    """
    if not 0.0 < u0 < 1.0:
        raise DomainError(f"level must lie in (0,1), got {u0}")
    n = int(n)
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n}")
    K, Kp = complete_K_pair(d.lam)
    xis = np.linspace(0.0, Kp, n)
    if abs(u0 - disk_u_infinity(d)) < _LEVEL_MATCH_TOL:
        half = 0.5 * _SPLIT_GAP_FRACTION * Kp
        lo, hi = 0.5 * Kp - half, 0.5 * Kp + half
        pieces = [np.concatenate((xis[xis < lo], [lo])),
                  np.concatenate(([hi], xis[xis > hi]))]
    else:
        pieces = [xis]

    x = (2.0 * u0 - 1.0) * K
    limit_point = (d.a - 1j) / (1.0 - 1j * d.a)  # Moebius image of omega = oo
    segments = []
    for xs in pieces:
        omega = jacobi_sn_array(x + 1j * xs, d.lam)
        z = np.where(np.isnan(omega), limit_point, _moebius_back(d, np.nan_to_num(omega)))
        # rectangle-coordinate parameter: eta = xi / (2K), in [0, h]
        etas = (xs / (2.0 * K)).tolist()
        segments.append(tuple(zip(etas, z.tolist())))
    return LevelCurve(level=float(u0), segments=tuple(segments))
