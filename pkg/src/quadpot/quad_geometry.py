"""Vertex-level geometry of the convex quadrilateral and its exterior domain.

The solver works on the unbounded complement D of a bounded convex
quadrilateral.  Vertices must be listed clockwise around the bounded polygon
so that D lies on the left of the traversal z1 -> z2 -> z3 -> z4.  At a
vertex with bounded interior angle theta_k the exterior domain has interior
angle 2*pi - theta_k = pi*(1 + a_k); the parameters a_k = 1 - theta_k/pi lie
in (0,1) and sum to 2.
"""
import cmath
import math
from dataclasses import dataclass

from .elliptic import mu_groetzsch
from .errors import DegeneratePolygonError, DomainError, OrientationError

_ANGLE_SUM_TOL = 1e-12
_COLLINEAR_TOL = 1e-13


@dataclass(frozen=True)
class Quadrilateral:
    z1: complex
    z2: complex
    z3: complex
    z4: complex

    @classmethod
    def from_vertices(cls, vertices):
        v = [complex(z) for z in vertices]
        if len(v) != 4:
            raise DomainError(f"need exactly 4 vertices, got {len(v)}")
        return cls(*v)

    @property
    def vertices(self):
        return (self.z1, self.z2, self.z3, self.z4)

    def diameter(self):
        v = self.vertices
        return max(abs(a - b) for a in v for b in v)

    def transformed(self, a, b=0):
        """Image under the similarity z -> a*z + b (a != 0)."""
        return Quadrilateral(*(a * z + b for z in self.vertices))


@dataclass(frozen=True)
class ExteriorAngles:
    """Angle parameters (alpha, beta, gamma, delta) of the exterior domain."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        for name, v in zip("alpha beta gamma delta".split(), self.as_tuple()):
            if not 0.0 < v < 1.0:
                raise DomainError(f"angle parameter {name}={v} outside (0,1)")
        if abs(self.alpha + self.beta + self.gamma + self.delta - 2.0) > _ANGLE_SUM_TOL:
            raise DomainError(
                f"angle parameters must sum to 2, got {self.alpha + self.beta + self.gamma + self.delta!r}")

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma, self.delta)


def validate(q):
    """Check strict convexity and clockwise orientation; return q unchanged.

    Raises ``DegeneratePolygonError`` for collinear or reflex configurations
    and ``OrientationError`` for a counterclockwise vertex order (the caller
    may reverse and retry; silent reordering would desynchronize the vertex
    labels from the boundary conditions).
    """
    if not isinstance(q, Quadrilateral):
        q = Quadrilateral.from_vertices(q)
    v = q.vertices
    for z in v:
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"vertex {z} is not finite")
    crosses = []
    for k in range(4):
        a = v[k] - v[k - 1]
        b = v[(k + 1) % 4] - v[k]
        if abs(a) == 0.0 or abs(b) == 0.0:
            raise DegeneratePolygonError("coincident consecutive vertices")
        cr = a.real * b.imag - a.imag * b.real
        if abs(cr) <= _COLLINEAR_TOL * abs(a) * abs(b):
            raise DegeneratePolygonError(
                f"vertices {v[k - 1]}, {v[k]}, {v[(k + 1) % 4]} are collinear")
        crosses.append(cr)
    if all(c > 0 for c in crosses):
        raise OrientationError("vertices are ordered counterclockwise; reverse them")
    if not all(c < 0 for c in crosses):
        raise DegeneratePolygonError("polygon is not convex (reflex vertex present)")
    return q


def exterior_angles(q):
    """Angle parameters a_k = 1 - theta_k/pi of the exterior domain at each vertex."""
    q = validate(q)
    v = q.vertices
    params = []
    for k in range(4):
        a = v[k] - v[k - 1]
        b = v[(k + 1) % 4] - v[k]
        turn = cmath.phase(b / a)  # in (-pi, 0) after validate
        params.append(-turn / math.pi)
    return ExteriorAngles(*params)


def cross_ratio_modulus(p1, p2, p3, p4):
    """Modulus of the quadrilateral (unit disk; p1..p4 on the circle).

    h = (2/pi) * mu(1/sqrt(k)) with the absolute cross-ratio
    k = |p1-p3||p2-p4| / (|p1-p2||p3-p4|), which exceeds 1 for four distinct
    points in admissible cyclic order.
    """
    pts = [complex(p) for p in (p1, p2, p3, p4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(pts[i] - pts[j]) < 1e-14 * max(1.0, abs(pts[i])):
                raise DomainError(f"coincident points {pts[i]} and {pts[j]}")
    for p in pts:
        if abs(abs(p) - 1.0) > 1e-6:
            raise DomainError(f"point {p} is not on the unit circle")
    k = (abs(pts[0] - pts[2]) * abs(pts[1] - pts[3])) / (
        abs(pts[0] - pts[1]) * abs(pts[2] - pts[3]))
    if not k > 1.0:
        raise DomainError(f"cross-ratio {k} <= 1: points are not in admissible order")
    return (2.0 / math.pi) * mu_groetzsch(1.0 / math.sqrt(k))
