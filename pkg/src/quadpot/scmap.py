"""Conformal map of the upper half plane onto the exterior domain.

The map is

    f(z) = C * int_0^z zeta^alpha (zeta-1)^beta (zeta-t)^gamma
                     / ((zeta-z0)^2 (zeta-conj(z0))^2) dzeta + z1,

with prevertices 0, 1, t, oo corresponding to the vertices z1..z4 and the
pole z0 fixed by the residue condition solved in :mod:`quadpot.accessory`.
This module owns

* Gauss-Jacobi quadrature of the side integrals, with the algebraic
  endpoint factors absorbed into the quadrature weight;
* the one-parameter solve for t: with angles fixed, t is pinned by the
  side-length ratio |f(t)-f(1)| / |f(1)-f(0)| = |z3-z2| / |z2-z1|, a
  strictly monotone function of t on the solver bracket;
* forward evaluation f(z) anywhere in the closed upper half plane via
  pole-avoiding polyline contours, plus the limit f(oo), which must
  reproduce z4 (the closure check of the whole construction).

All powers are principal-branch; on the real axis that coincides with the
limit from above, so legs may run along the boundary.  Any global phase is
absorbed by C, which is computed from the same convention.
"""
import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import roots_jacobi

from . import _kernels as kernels
from .accessory import solve_pole
from .elliptic import complete_K_pair, inverse_mu
from .errors import (BracketingError, ConvergenceError, DomainError,
                     NumericalError, PoleProximityError)
from .quad_geometry import Quadrilateral, exterior_angles, validate

_SIDE_RTOL = 5e-13
_LEG_RTOL = 1e-11
_MAX_GJ_NODES = 1536
_MAX_SPLIT_DEPTH = 10
_MAX_LEG_DEPTH = 30
_T_CAP = 1e8
_RATIO_TOL = 1e-10


@dataclass(frozen=True)
class SCIntegrand:
    """Integrand data: angle parameters, prevertex t and pole z0."""

    angles: object
    t: float
    z0: complex

    @property
    def alpha(self):
        return self.angles.alpha

    @property
    def beta(self):
        return self.angles.beta

    @property
    def gamma(self):
        return self.angles.gamma

    @property
    def delta(self):
        return self.angles.delta

    def values(self, zeta):
        """Principal-branch integrand values at complex nodes."""
        return kernels.integrand_values(zeta, self.alpha, self.beta, self.gamma,
                                        self.t, self.z0)


@dataclass(frozen=True)
class AccessoryParams:
    """Solved map data: t > 1, r = 1/sqrt(t), pole z0, scale C, modulus h."""

    t: float
    r: float
    z0: complex
    C: complex
    h: float
    angles: object

    def integrand(self):
        return SCIntegrand(self.angles, self.t, self.z0)


# ---------------------------------------------------------------------------
# quadrature primitives


@lru_cache(maxsize=4096)
def _gj01_nodes(n, a, b):
    """Nodes/weights for int_0^1 u^a (1-u)^b f(u) du on (0,1)."""
    x, w = roots_jacobi(n, b, a)  # scipy weight: (1-x)^first * (1+x)^second
    return 0.5 * (x + 1.0), w * 0.5 ** (a + b + 1.0)


@lru_cache(maxsize=64)
def _gl_nodes(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (x + 1.0), 0.5 * w


def _jacobi01(S, a, b, rtol, atol, depth=0):
    """Adaptive int_0^1 u^a (1-u)^b S(u) du; S is vectorized and smooth.

    Gauss-Jacobi with node doubling; if doubling stalls (smooth part with a
    nearby singularity), bisect and absorb the now-regular endpoint factors
    into the smooth part.
    """
    prev = None
    n = 24
    while n <= _MAX_GJ_NODES:
        u, W = _gj01_nodes(n, float(a), float(b))
        val = complex(np.dot(W, S(u)))
        if prev is not None and abs(val - prev) <= max(atol, rtol * abs(val)):
            return val
        prev = val
        n *= 2
    if depth >= _MAX_SPLIT_DEPTH:
        raise NumericalError("Gauss-Jacobi refinement failed to stabilize")
    left = _jacobi01(lambda v: (1.0 - 0.5 * v) ** b * S(0.5 * v),
                     a, 0.0, rtol, 0.5 * atol * 2.0 ** (1 + a), depth + 1)
    right = _jacobi01(lambda v: (1.0 - 0.5 * v) ** a * S(1.0 - 0.5 * v),
                      b, 0.0, rtol, 0.5 * atol * 2.0 ** (1 + b), depth + 1)
    return 0.5 ** (1.0 + a) * left + 0.5 ** (1.0 + b) * right


def _leg(geval, za, zb, rtol, atol, depth=0):
    """Adaptive int over the straight segment [za, zb] of a smooth integrand."""
    d = zb - za
    u1, w1 = _gl_nodes(16)
    u2, w2 = _gl_nodes(32)
    v2 = geval(za + d * u2)
    coarse = d * complex(np.dot(w1, geval(za + d * u1)))
    fine = d * complex(np.dot(w2, v2))
    err = abs(fine - coarse)
    if err <= max(atol, rtol * abs(fine)):
        return fine
    if depth >= _MAX_LEG_DEPTH:
        raise NumericalError(
            f"contour leg [{za}, {zb}] failed to converge (err {err:.2e})")
    mid = za + 0.5 * d
    return (_leg(geval, za, mid, rtol, 0.5 * atol, depth + 1)
            + _leg(geval, mid, zb, rtol, 0.5 * atol, depth + 1))


# ---------------------------------------------------------------------------
# the three kinds of contour pieces


def _geval_full(igd):
    return lambda zeta: kernels.integrand_values(
        zeta, igd.alpha, igd.beta, igd.gamma, igd.t, igd.z0)


def _leg_from_prevertex(igd, p, w, rtol, atol):
    """int_p^w g along a straight leg leaving the prevertex p in {0, 1, t}.

    The algebraic factor (zeta-p)^e is absorbed by the Jacobi weight; the
    direction factor (w-p)^(1+e) restores it on the principal branch.
    """
    if p == 0.0:
        e, flags = igd.alpha, dict(use0=False)
    elif p == 1.0:
        e, flags = igd.beta, dict(use1=False)
    else:
        e, flags = igd.gamma, dict(uset=False)
    d = complex(w) - p
    if d == 0:
        return 0j
    S = lambda u: kernels.integrand_values(p + d * u, igd.alpha, igd.beta,
                                           igd.gamma, igd.t, igd.z0, **flags)
    scale = abs(d) ** (1.0 + e)
    inner = _jacobi01(S, e, 0.0, rtol, atol / scale if atol else 0.0)
    return d ** (1.0 + e) * inner


def _tail_integral(igd, z, rtol, atol):
    """int_z^oo g along the outward ray through z (requires |z| > t, |z0|).

    Substituting zeta = z/u turns the tail into int_0^1 u^delta * smooth du,
    since g decays like zeta^(-2-delta).
    """
    delta = igd.delta
    z = complex(z)
    geval = _geval_full(igd)

    def S(u):
        return geval(z / u) * z * u ** (-2.0 - delta)

    return _jacobi01(S, delta, 0.0, rtol, atol)


def side_integral(integrand, segment, rtol=_SIDE_RTOL, atol=0.0):
    """Integral of the map integrand over a prevertex side, '01' or '1t'.

    Endpoint algebraic factors are absorbed by Gauss-Jacobi weights with the
    matching exponents; the result carries the principal-branch phases of
    the factors that are negative on the segment.
    """
    igd = integrand
    al, be, ga, t = igd.alpha, igd.beta, igd.gamma, igd.t
    if igd.z0.imag == 0.0:
        raise DomainError("pole z0 must lie off the real axis")
    if segment in ("01", "[0,1]"):
        S = lambda u: kernels.integrand_values(u, al, be, ga, t, igd.z0,
                                               use0=False, use1=False)
        inner = _jacobi01(S, al, be, rtol, atol)
        return cmath.exp(1j * math.pi * be) * inner
    if segment in ("1t", "[1,t]"):
        d = t - 1.0
        S = lambda u: kernels.integrand_values(1.0 + d * u, al, be, ga, t, igd.z0,
                                               use1=False, uset=False)
        inner = _jacobi01(S, be, ga, rtol, atol / d ** (1.0 + be + ga) if atol else 0.0)
        return d ** (1.0 + be + ga) * cmath.exp(1j * math.pi * ga) * inner
    raise DomainError(f"unknown segment {segment!r}; use '01' or '1t'")


# ---------------------------------------------------------------------------
# parameter solve


_T_FLOOR = 1.0 + 1e-6


def _aspect_seed(q):
    """Crude modulus estimate from opposite side lengths, seeding the bracket."""
    v = q.vertices
    h0 = (abs(v[2] - v[1]) + abs(v[0] - v[3])) / (abs(v[1] - v[0]) + abs(v[3] - v[2]))
    r0 = inverse_mu(0.5 * math.pi * h0)
    t0 = 1.0 / (r0 * r0)
    return min(max(t0, 2.0 * _T_FLOOR), 1e6)


def _side_ratio(angles, t, rtol=_SIDE_RTOL):
    pole = solve_pole(angles, t)
    igd = SCIntegrand(angles, t, pole.z0)
    i01 = side_integral(igd, "01", rtol=rtol)
    i1t = side_integral(igd, "1t", rtol=rtol)
    return abs(i1t) / abs(i01)


def _bracket_logt(resid, u0, target):
    """Bracket the side-ratio root in log t, expanding from the seed u0.

    The ratio is increasing in t and tends to 0 as t -> 1, so the residual
    is negative at small t and positive at large t.  Near the t floor the
    pole solve can fail in double precision (near-double cubic root); a
    failure while walking downward triggers a step backoff instead of an
    abort, since the sign there is known to be negative anyway.
    """
    from .errors import AmbiguousRootError, NoAdmissibleRootError
    u_floor, u_cap = math.log(_T_FLOOR), math.log(_T_CAP)
    solver_errors = (NoAdmissibleRootError, AmbiguousRootError, NumericalError)

    def try_eval(u):
        try:
            return resid(u), True
        except solver_errors:
            return math.nan, False

    f0, ok = try_eval(u0)
    u = u0
    for _ in range(20):
        if ok:
            break
        u = min(u + math.log(4.0), u_cap)
        f0, ok = try_eval(u)
    else:
        raise BracketingError("side ratio unevaluable at and above the seed t")
    u0, f0 = u, f0
    if f0 == 0.0:
        return u0 - 1e-9, u0 + 1e-9

    direction = -1.0 if f0 > 0.0 else 1.0
    u_prev, f_prev = u0, f0
    step = math.log(1.3)
    for _ in range(200):
        u_next = u_prev + direction * step
        u_next = max(u_floor, min(u_cap, u_next))
        if u_next == u_prev:
            raise BracketingError(
                "side-ratio sign does not change inside the representable t range")
        f_next, ok = try_eval(u_next)
        if ok and (f_next == 0.0 or (f_next < 0.0) != (f_prev < 0.0)):
            return (u_next, u_prev) if u_next < u_prev else (u_prev, u_next)
        if ok:
            u_prev, f_prev = u_next, f_next
            step *= 2.0
            if direction < 0 and u_prev <= u_floor and f_prev > 0.0:
                raise BracketingError("side ratio still above target at the t floor")
            if direction > 0 and u_prev >= u_cap and f_prev < 0.0:
                raise BracketingError(f"no sign change for t up to {_T_CAP:g}")
        else:
            if direction > 0:
                raise BracketingError("side ratio unevaluable while expanding upward")
            step *= 0.5
            if step < 1e-12:
                raise BracketingError(
                    "side ratio unevaluable down to the working t floor")
    raise BracketingError("bracket expansion exhausted without a sign change")


def solve_parameters(q):
    """Solve the accessory-parameter problem for a validated quadrilateral.

    Returns :class:`AccessoryParams` with t such that the side-length ratio
    matches, r = 1/sqrt(t), the pole z0, the scale C making f(1) = z2, and
    the conformal modulus h = K(r')/K(r).
    """
    if not isinstance(q, Quadrilateral):
        q = Quadrilateral.from_vertices(q)
    q = validate(q)
    angles = exterior_angles(q)
    target = abs(q.z3 - q.z2) / abs(q.z2 - q.z1)

    samples = []

    def resid(logt):
        t = math.exp(logt)
        val = _side_ratio(angles, t) - target
        samples.append((t, val))
        return val

    ulo, uhi = _bracket_logt(resid, math.log(_aspect_seed(q)), target)

    # the ratio must be monotone in t on everything we sampled; a violation
    # would mean the root found below is not unique
    samples.sort()
    for (t_a, f_a), (t_b, f_b) in zip(samples, samples[1:]):
        if f_b < f_a - 1e-9 * (1.0 + abs(f_a)):
            raise BracketingError(
                f"side-ratio not monotone between t={t_a:.6g} and t={t_b:.6g}")

    ustar = brentq(resid, ulo, uhi, xtol=1e-15, rtol=8.9e-16, maxiter=200)
    t = math.exp(ustar)
    final = _side_ratio(angles, t) - target
    if abs(final) > _RATIO_TOL * max(1.0, target):
        raise ConvergenceError(
            f"side-ratio residual {final:.3e} above tolerance at t={t!r}")

    pole = solve_pole(angles, t)
    igd = SCIntegrand(angles, t, pole.z0)
    C = (q.z2 - q.z1) / side_integral(igd, "01")
    r = 1.0 / math.sqrt(t)
    K, Kp = complete_K_pair(r)
    return AccessoryParams(t=t, r=r, z0=pole.z0, C=C, h=Kp / K, angles=angles)


# ---------------------------------------------------------------------------
# forward evaluation


def _far_radius(params):
    return 3.0 * max(1.0, params.t, abs(params.z0)) + 1.0


def _plan_waypoints(z, z0, guard):
    """Polyline 0 -> ... -> z staying clear of the pole z0.

    Take off vertically (short leg, singular weight at 0), climb to a cruise
    altitude above the pole, shift horizontally, descend at an abscissa
    detoured away from the pole if needed, then approach horizontally.
    """
    x, y = z.real, z.imag
    x0, y0 = z0.real, z0.imag
    side = math.copysign(1.0, x - x0) if x != x0 else 1.0
    L0 = 0.4 * min(1.0, abs(z0))
    Y = max(2.0 * y0 + 0.5, 1.5 * L0, 1.0)
    wps = [complex(0.0, L0)]
    xc = 0.0
    if abs(x0) < 2.0 * guard and L0 < y0:
        xc = x0 - 5.0 * guard * side
    wps.append(complex(xc, Y))
    xd = x
    if abs(x - x0) < 2.0 * guard and y < y0 + guard and y < Y:
        xd = x0 + 2.0 * guard * side
    wps.append(complex(xd, Y))
    if y < Y:
        wps.append(complex(xd, y))
    wps.append(z)
    out = []
    for w in wps:
        if not out or abs(w - out[-1]) > 1e-14 * max(1.0, abs(w)):
            out.append(w)
    return out


def _axis_integral(igd, x, rtol, atol):
    """int_0^x g along the real axis (upper-side limits), x >= 0."""
    t = igd.t
    if x <= 1.0:
        if x == 1.0:
            return side_integral(igd, "01", rtol=rtol, atol=atol)
        return _leg_from_prevertex(igd, 0.0, x, rtol, atol)
    base = side_integral(igd, "01", rtol=rtol, atol=atol)
    if x <= t:
        if x == t:
            return base + side_integral(igd, "1t", rtol=rtol, atol=atol)
        return base + _leg_from_prevertex(igd, 1.0, x, rtol, atol)
    base += side_integral(igd, "1t", rtol=rtol, atol=atol)
    return base + _leg_from_prevertex(igd, t, x, rtol, atol)


@lru_cache(maxsize=128)
def _f_infinity(params, q):
    igd = params.integrand()
    T = 2.0 * max(params.t, abs(params.z0)) + 1.0
    atol = _abs_budget(params, q)
    total = _axis_integral(igd, T, _LEG_RTOL, atol)
    total += _tail_integral(igd, T, _LEG_RTOL, atol)
    return q.z1 + params.C * total


def _abs_budget(params, q):
    return 1e-12 * q.diameter() / abs(params.C)


def map_increment(params, za, zb, rtol=_LEG_RTOL, atol=0.0):
    """f(zb) - f(za) over the straight chord [za, zb] (no pole check).

    The chord must not cross the pole; callers that walk along level curves
    guarantee that by construction.
    """
    igd = params.integrand()
    return params.C * _leg(_geval_full(igd), complex(za), complex(zb), rtol, atol)


def forward_map(params, q, z, route="auto"):
    """Evaluate f(z) for z in the closed upper half plane.

    ``route`` selects the contour: 'axis' (real z, Gauss-Jacobi segment
    chain), 'direct' (pole-avoiding polyline), 'far' (outward-ray tail from
    f(oo), valid for large |z|), or 'auto'. Distinct routes agree within the
    quadrature tolerance because the residue at the pole vanishes.
    """
    z = complex(z)
    if z.imag < 0.0:
        raise DomainError(f"argument {z} lies in the lower half plane")
    guard = 0.1 * params.z0.imag
    if abs(z - params.z0) < guard:
        raise PoleProximityError(
            f"{z} is within the guard distance {guard:.3e} of the pole {params.z0}")
    igd = params.integrand()
    atol = _abs_budget(params, q)

    if route == "auto":
        if abs(z) >= _far_radius(params):
            route = "far"
        elif z.imag == 0.0:
            route = "axis"
        else:
            route = "direct"

    if route == "far":
        if abs(z) < 1.5 * max(1.0, params.t, abs(params.z0)):
            raise DomainError(f"|z|={abs(z):.3g} too small for the far-field route")
        return _f_infinity(params, q) - params.C * _tail_integral(igd, z, _LEG_RTOL, atol)

    if route == "axis":
        if z.imag != 0.0:
            raise DomainError("axis route requires a real argument")
        if z.real >= 0.0:
            return q.z1 + params.C * _axis_integral(igd, z.real, _LEG_RTOL, atol)
        return q.z1 + params.C * _leg_from_prevertex(igd, 0.0, z, _LEG_RTOL, atol)

    if route == "direct":
        if z == 0:
            return complex(q.z1)
        if z.imag == 0.0 and z.real > 0.0:
            return q.z1 + params.C * _axis_integral(igd, z.real, _LEG_RTOL, atol)
        wps = _plan_waypoints(z, params.z0, guard)
        geval = _geval_full(igd)
        total = _leg_from_prevertex(igd, 0.0, wps[0], _LEG_RTOL, atol)
        for za, zb in zip(wps, wps[1:]):
            total += _leg(geval, za, zb, _LEG_RTOL, atol)
        return q.z1 + params.C * total

    raise DomainError(f"unknown route {route!r}")


def map_at_infinity(params, q):
    """lim_{z->oo} f(z); must reproduce the fourth vertex z4.

    \\|map_at_infinity - z4\\| / diam(q) is the closure residual validating
    the whole parameter solve.
    """
    if not isinstance(q, Quadrilateral):
        q = Quadrilateral.from_vertices(q)
    return _f_infinity(params, q)
