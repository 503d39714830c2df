"""quadpot: potential function of the exterior of a convex quadrilateral.

Computes the harmonic potential of the mixed Dirichlet-Neumann problem in
the unbounded complement of a convex polygonal quadrilateral -- in
particular its value at infinity -- via a generalized Schwarz-Christoffel
map with one double pole, and traces its level curves.  A closed-form
disk-exterior configuration is included as an independent cross-check.
"""
from ._kernels import available_backends, backend_name, use_backend
from .accessory import (CubicCoefficients, Pole, cubic_coefficients,
                        eqz0_residual, solve_pole)
from .disk_exterior import (DiskQuadrilateral, disk_setup, disk_trace_level,
                            disk_u_infinity, vertex_images)
from .elliptic import (EllipticModulus, carlson_RF, complete_K,
                       complete_K_pair, incomplete_F, jacobi_sn,
                       jacobi_sn_array, mu_groetzsch)
from .errors import (AmbiguousRootError, BracketingError, ConvergenceError,
                     DegeneratePolygonError, DomainError,
                     NoAdmissibleRootError, NumericalError, OrientationError,
                     PoleProximityError, QuadpotError)
from .potential import LevelCurve, PotentialSolution, psi, trace_level, u_infinity
from .quad_geometry import (ExteriorAngles, Quadrilateral,
                            cross_ratio_modulus, exterior_angles, validate)
from .scmap import (AccessoryParams, SCIntegrand, forward_map,
                    map_at_infinity, map_increment, side_integral,
                    solve_parameters)

__version__ = "0.1.0"

__all__ = [
    "AccessoryParams", "AmbiguousRootError", "BracketingError",
    "ConvergenceError", "CubicCoefficients", "DegeneratePolygonError",
    "DiskQuadrilateral", "DomainError", "EllipticModulus", "ExteriorAngles",
    "LevelCurve", "NoAdmissibleRootError", "NumericalError",
    "OrientationError", "Pole", "PoleProximityError", "PotentialSolution",
    "QuadpotError", "Quadrilateral", "SCIntegrand", "available_backends",
    "backend_name", "carlson_RF", "complete_K", "complete_K_pair",
    "cross_ratio_modulus", "cubic_coefficients", "disk_setup",
    "disk_trace_level", "disk_u_infinity", "eqz0_residual",
    "exterior_angles", "forward_map", "incomplete_F", "jacobi_sn",
    "jacobi_sn_array", "map_at_infinity", "map_increment", "mu_groetzsch",
    "psi", "side_integral", "solve_parameters", "solve_pole", "trace_level",
    "u_infinity", "use_backend", "validate", "vertex_images",
]
