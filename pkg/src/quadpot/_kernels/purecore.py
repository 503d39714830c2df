"""Pure-numpy implementation of the hot mapping-integrand kernel.

The quantity evaluated here is the derivative density of the half-plane-to-
exterior conformal map,

    g(z) = z**alpha * (z - 1)**beta * (z - t)**gamma / ((z - z0)**2 * (z - conj(z0))**2),

on arrays of complex quadrature nodes.  Every power is taken on the principal
branch, so for real nodes the values coincide with the limit from the upper
half plane.  The three ``use*`` flags let a caller drop a factor that a
Gauss-Jacobi weight already absorbed.
"""
import numpy as np

BACKEND = "pure"


def integrand_values(zeta, alpha, beta, gamma, t, z0, use0=True, use1=True, uset=True):
    """Evaluate g at the complex nodes ``zeta``, skipping absorbed factors."""
    zeta = np.asarray(zeta, dtype=np.complex128)
    num = np.ones_like(zeta)
    if use0:
        num = num * zeta**alpha
    if use1:
        num = num * (zeta - 1.0)**beta
    if uset:
        num = num * (zeta - t)**gamma
    d1 = zeta - z0
    d2 = zeta - np.conj(z0)
    return num / (d1 * d1 * d2 * d2)


def integrand_weighted_sum(zeta, weights, alpha, beta, gamma, t, z0,
                           use0=True, use1=True, uset=True):
    """Return sum(weights * g(zeta)) as a single complex number."""
    vals = integrand_values(zeta, alpha, beta, gamma, t, z0, use0, use1, uset)
    return complex(np.dot(np.asarray(weights, dtype=np.float64), vals))
