"""Potential function of the exterior domain and its level curves.

With the accessory parameters solved, the rectangle map of the upper half
plane is

    psi(z) = F(r, arcsin sqrt(z)) / K(r),     r = 1/sqrt(t),

which sends the half plane onto [0,1] x [0,h] with 0 -> 0, 1 -> 1,
t -> 1 + i h, oo -> i h.  The potential at a physical point w is
Re psi(f^{-1}(w)); its value at infinity is Re psi(z0) because the pole z0
is the preimage of infinity.  Level curves u = c are traced by pulling the
rectangle's vertical segment c + i eta back to the half plane via
z(eta) = sn^2(K(r) (c + i eta), r) and pushing it through the forward map.
"""
import math
from dataclasses import dataclass

import numpy as np

from .accessory import solve_pole
from .elliptic import complete_K_pair, incomplete_F, jacobi_sn_array
from .errors import DomainError, NumericalError
from .quad_geometry import Quadrilateral, validate
from .scmap import forward_map, map_increment, solve_parameters

_LEVEL_MATCH_TOL = 1e-9
# Half-width of the excised parameter gap around the curve through infinity,
# as a fraction of h.  Small enough that the nearest retained sample exceeds
# |w| = 1e4 comfortably (the curve blows up like 1/(eta - v_inf)).
_SPLIT_GAP_FRACTION = 2e-5


@dataclass(frozen=True)
class PotentialSolution:
    """Solved potential data for one quadrilateral."""

    params: object
    quad: Quadrilateral
    u_inf: float
    v_inf: float


@dataclass(frozen=True)
class LevelCurve:
    """A level value plus the traced polyline(s).

    ``segments`` holds one tuple of (eta, w) samples, or two for the level
    through infinity, which is split around the pole parameter.
    """

    level: float
    segments: tuple

    @property
    def points(self):
        return tuple(p for seg in self.segments for p in seg)


def psi(params, z):
    """Rectangle map of the half plane, F(r, arcsin sqrt(z)) / K(r).

    sqrt is principal; real z beyond the branch points is evaluated as the
    limit from the upper half plane, so the boundary correspondence
    Im psi = 0 on (0,1), Re psi = 1 on (1,t), Re psi = 0 on (-oo,0) and
    Im psi = h on (t,oo) holds exactly on the axis.
    """
    z = complex(z)
    z = complex(z.real, z.imag + 0.0)  # normalize -0.0 imaginary parts
    if z.imag == 0.0 and z.real < 0.0:
        w = complex(0.0, math.sqrt(-z.real))
    else:
        w = np.sqrt(complex(z))
    K, _ = complete_K_pair(params.r)
    return incomplete_F(params.r, w) / K


def u_infinity(q):
    """Full solve: accessory parameters plus the potential value at infinity."""
    if not isinstance(q, Quadrilateral):
        q = Quadrilateral.from_vertices(q)
    q = validate(q)
    params = solve_parameters(q)
    # the pole stored in params must be reproducible from (angles, t)
    check = solve_pole(params.angles, params.t).z0
    if abs(check - params.z0) > 1e-12 * max(1.0, abs(params.z0)):
        raise NumericalError("pole in params disagrees with a fresh solve")
    w0 = psi(params, params.z0)
    u, v = w0.real, w0.imag
    if not (0.0 < u < 1.0 and 0.0 < v < params.h):
        raise NumericalError(
            f"psi(z0) = {w0} escaped the rectangle (h = {params.h}); solve is inconsistent")
    return PotentialSolution(params=params, quad=q, u_inf=u, v_inf=v)


def _pullbacks(params, c, etas):
    K, _ = complete_K_pair(params.r)
    w = K * (c + 1j * np.asarray(etas, dtype=np.float64))
    sn = jacobi_sn_array(w, params.r)
    return sn * sn


def trace_level(sol, c, n):
    """Trace the level curve u = c with n interior samples.

    Samples eta uniformly on [eps, h-eps] with eps = h/(10n), plus the exact
    boundary parameters eta = 0 and eta = h so the curve's ends land on the
    polygon sides.  If c is the level through infinity, the parameter range
    is split around eta = v_inf with a gap of h*1e-3 and the two pieces are
    anchored at their boundary ends.
    """
    if not 0.0 < c < 1.0:
        raise DomainError(f"level must lie in (0,1), got {c}")
    n = int(n)
    if not 2 <= n <= 10 ** 6:
        raise DomainError(f"sample count {n} outside [2, 1e6]")
    params = sol.params
    h = params.h
    eps = h / (10.0 * n)
    interior = np.linspace(eps, h - eps, n)

    if abs(c - sol.u_inf) < _LEVEL_MATCH_TOL:
        half = 0.5 * _SPLIT_GAP_FRACTION * h
        lo, hi = sol.v_inf - half, sol.v_inf + half
        below = [e for e in interior if e < lo]
        above = [e for e in interior if e > hi]
        # geometric ladder of parameters closing in on the gap edges, so the
        # polyline resolves the blow-up instead of jumping to it in one step
        start = sol.v_inf - (below[-1] if below else eps)
        ladder = [d for d in (start * 0.25 ** k for k in range(1, 8)) if d > half]
        e1 = [0.0] + below + [sol.v_inf - d for d in ladder] + [lo]
        e2 = [hi] + [sol.v_inf + d for d in reversed(ladder)] + above + [h]
        pieces = [(np.array(e1), "forward"), (np.array(e2), "backward")]
    else:
        pieces = [(np.concatenate(([0.0], interior, [h])), "forward")]

    segments = []
    for etas, direction in pieces:
        zs = _pullbacks(params, c, etas)
        if np.any(np.isnan(zs)):
            raise NumericalError("pullback hit a pole of sn; split bookkeeping failed")
        ws = np.empty(len(zs), dtype=np.complex128)
        if direction == "forward":
            order = range(1, len(zs))
            anchor = 0
        else:
            order = range(len(zs) - 2, -1, -1)
            anchor = len(zs) - 1
        # the anchor parameter is eta = 0 or eta = h, whose pullback is real
        # up to roundoff; strip the residual imaginary part
        za = complex(zs[anchor])
        if abs(za.imag) < 1e-12 * max(1.0, abs(za.real)):
            za = complex(za.real, 0.0)
        ws[anchor] = forward_map(params, sol.quad, za)
        prev = anchor
        for j in order:
            ws[j] = ws[prev] + map_increment(
                params, zs[prev], zs[j],
                atol=1e-12 * sol.quad.diameter() / abs(params.C))
            prev = j
        segments.append(tuple(zip(etas.tolist(), ws.tolist())))
    return LevelCurve(level=float(c), segments=tuple(segments))
