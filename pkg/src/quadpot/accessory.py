"""Accessory-parameter solve: the pole z0 of the exterior map.

For the map of the upper half plane onto the exterior domain, single-
valuedness forces the residue of the integrand at its double pole z0 to
vanish:

    alpha/z0 + beta/(z0 - 1) + gamma/(z0 - t) = 1/(i y0),   z0 = x0 + i y0.

Splitting into real and imaginary parts turns this into a real cubic
A x^3 + B x^2 + C x + D = 0 for x0 together with y0^2 = rho(x0) - x0^2,
where rho(x) = alpha t x / ((1-E) x + E (t+1) - gamma t - beta) and
E = alpha + beta + gamma - 1.  Exactly one real root satisfies
x^2 < rho(x); the residual of the displayed equation is the ground truth
used to verify the selected root.
"""
import math
from dataclasses import dataclass

from .errors import (AmbiguousRootError, DomainError, NoAdmissibleRootError,
                     NumericalError)

_RHO_DENOM_GUARD = 1e-13
_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class CubicCoefficients:
    E: float
    A: float
    B: float
    C: float
    D: float
    t: float


@dataclass(frozen=True)
class Pole:
    x0: float
    y0: float

    def __post_init__(self):
        if not self.y0 > 0.0:
            raise DomainError(f"pole must lie in the open upper half plane, y0={self.y0}")

    @property
    def z0(self):
        return complex(self.x0, self.y0)


def cubic_coefficients(angles, t):
    """Coefficients (E, A, B, C, D) of the pole cubic, pure arithmetic."""
    if not t > 1.0:
        raise DomainError(f"prevertex t must exceed 1, got {t}")
    al, be, ga = angles.alpha, angles.beta, angles.gamma
    E = al + be + ga - 1.0
    A = 2.0 * (E - 1.0) ** 2
    B = (E - 1.0) * (4.0 - 3.0 * (al + ga) + (4.0 - 3.0 * (al + be)) * t)
    C = (2.0 - 3.0 * (al + ga) + (al + ga) ** 2
         + 2.0 * (3.0 - 5.0 * al - 2.0 * be - 2.0 * ga
                  + 2.0 * al * al + 2.0 * al * be + 2.0 * al * ga + be * ga) * t
         + (2.0 - 3.0 * (al + be) + (al + be) ** 2) * t * t)
    D = (1.0 - al) * (al + ga - 1.0 + (al + be - 1.0) * t) * t
    return CubicCoefficients(E=E, A=A, B=B, C=C, D=D, t=float(t))


def _rho(angles, t, x):
    """(rho(x), denominator); rho has a simple pole where the denominator vanishes."""
    al, be, ga = angles.alpha, angles.beta, angles.gamma
    E = al + be + ga - 1.0
    den = (1.0 - E) * x + E * (t + 1.0) - ga * t - be
    if den == 0.0:
        return math.inf, 0.0
    return al * t * x / den, den


def _real_cubic_roots(a3, a2, a1, a0):
    """Real roots of a3 x^3 + a2 x^2 + a1 x + a0, closed form + Newton polish."""
    b, c, d = a2 / a3, a1 / a3, a0 / a3
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    shift = -b / 3.0
    disc = -4.0 * p ** 3 - 27.0 * q * q
    if disc >= 0.0:
        # three real roots (possibly multiple): trigonometric form
        if p == 0.0:
            roots = [shift]
        else:
            m = 2.0 * math.sqrt(-p / 3.0)
            arg = 3.0 * q / (p * m)
            arg = min(1.0, max(-1.0, arg))
            theta = math.acos(arg) / 3.0
            roots = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) + shift
                     for k in range(3)]
    else:
        # one real root: Cardano
        s = math.sqrt(q * q / 4.0 + p ** 3 / 27.0)
        u = math.copysign(abs(-q / 2.0 + s) ** (1.0 / 3.0), -q / 2.0 + s)
        v = -p / (3.0 * u) if u != 0.0 else 0.0
        roots = [u + v + shift]

    def poly(x):
        return ((a3 * x + a2) * x + a1) * x + a0

    def dpoly(x):
        return (3.0 * a3 * x + 2.0 * a2) * x + a1

    polished = []
    for x in roots:
        for _ in range(2):
            dp = dpoly(x)
            if dp != 0.0:
                x -= poly(x) / dp
        polished.append(x)
    return polished


def eqz0_residual(angles, t, z0):
    """Magnitude of the residue condition at z0 (0 at the true pole)."""
    z0 = complex(z0)
    y0 = z0.imag
    if y0 <= 0.0:
        raise DomainError(f"z0 must lie strictly in the upper half plane, got {z0}")
    for p in (0.0, 1.0, t):
        if abs(z0 - p) < 1e-300:
            raise DomainError(f"z0 coincides with the prevertex {p}")
    al, be, ga = angles.alpha, angles.beta, angles.gamma
    lhs = al / z0 + be / (z0 - 1.0) + ga / (z0 - t)
    return abs(lhs - 1.0 / complex(0.0, y0))


def solve_pole(angles, t):
    """Pole z0 = x0 + i y0 for the given angle parameters and prevertex t.

    Solves the cubic, keeps the unique real root with x^2 < rho(x) (skipping
    roots that sit on rho's pole), and verifies the residue condition.
    """
    co = cubic_coefficients(angles, t)
    if co.A <= 0.0:
        raise DomainError("cubic degenerates (leading coefficient <= 0); angles invalid")
    roots = _real_cubic_roots(co.A, co.B, co.C, co.D)
    scale = max(1.0, abs(t))
    admissible = []
    for x in roots:
        rho, den = _rho(angles, t, x)
        if abs(den) < _RHO_DENOM_GUARD * scale:
            continue
        if x * x < rho:
            admissible.append((x, math.sqrt(rho - x * x)))
    if not admissible:
        raise NoAdmissibleRootError(
            f"no cubic root satisfies x^2 < rho(x) for t={t}; inputs inconsistent")
    if len(admissible) > 1:
        # numerical copies of a (near-)double root both pass the inequality;
        # genuinely distinct admissible roots contradict uniqueness
        xs = sorted(a[0] for a in admissible)
        if xs[-1] - xs[0] <= 1e-6 * scale:
            x = sum(xs) / len(xs)
            rho, _ = _rho(angles, t, x)
            admissible = [(x, math.sqrt(max(rho - x * x, 0.0)))]
        else:
            raise AmbiguousRootError(
                f"{len(admissible)} cubic roots satisfy the selection inequality at t={t}: {xs}")
    pole = Pole(*admissible[0])
    res = eqz0_residual(angles, t, pole.z0)
    if res > _RESIDUAL_TOL:
        raise NumericalError(
            f"pole residual {res:.3e} exceeds {_RESIDUAL_TOL} at t={t}")
    return pole
