# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loop for the mapping-integrand kernel.

Same contract as ``purecore``: principal-branch powers throughout, with
``use*`` flags to skip factors absorbed into Gauss-Jacobi weights.  The
principal power is computed from log/atan2 directly so the branch convention
is bit-compatible with the numpy fallback.
"""
from libc.math cimport atan2, cos, exp, hypot, log, sin

import numpy as np

BACKEND = "compiled"


cdef inline double complex _cpow(double complex z, double a) noexcept nogil:
    cdef double m = hypot(z.real, z.imag)
    cdef double th, r
    if m == 0.0:
        # exponents here are always > 0
        return 0.0
    th = a * atan2(z.imag, z.real)
    r = exp(a * log(m))
    return r * cos(th) + 1j * (r * sin(th))


cdef inline double complex _g_one(double complex z, double alpha, double beta,
                                  double gamma, double t, double complex z0,
                                  double complex z0c, bint use0, bint use1,
                                  bint uset) noexcept nogil:
    cdef double complex acc = 1.0
    cdef double complex d1, d2
    if use0:
        acc = acc * _cpow(z, alpha)
    if use1:
        acc = acc * _cpow(z - 1.0, beta)
    if uset:
        acc = acc * _cpow(z - t, gamma)
    d1 = z - z0
    d2 = z - z0c
    return acc / (d1 * d1 * d2 * d2)


def integrand_values(zeta, double alpha, double beta, double gamma, double t,
                     double complex z0, bint use0=True, bint use1=True,
                     bint uset=True):
    """Evaluate g at the complex nodes ``zeta``, skipping absorbed factors."""
    cdef double complex[::1] zv = np.ascontiguousarray(zeta, dtype=np.complex128)
    out = np.empty(zv.shape[0], dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef double complex z0c = z0.conjugate()
    cdef Py_ssize_t i, n = zv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _g_one(zv[i], alpha, beta, gamma, t, z0, z0c, use0, use1, uset)
    return out


def integrand_weighted_sum(zeta, weights, double alpha, double beta,
                           double gamma, double t, double complex z0,
                           bint use0=True, bint use1=True, bint uset=True):
    """Return sum(weights * g(zeta)) as a single complex number."""
    cdef double complex[::1] zv = np.ascontiguousarray(zeta, dtype=np.complex128)
    cdef double[::1] wv = np.ascontiguousarray(weights, dtype=np.float64)
    cdef double complex z0c = z0.conjugate()
    cdef double complex acc = 0.0
    cdef Py_ssize_t i, n = zv.shape[0]
    if wv.shape[0] != n:
        raise ValueError("zeta and weights must have matching lengths")
    with nogil:
        for i in range(n):
            acc = acc + wv[i] * _g_one(zv[i], alpha, beta, gamma, t, z0, z0c,
                                       use0, use1, uset)
    return complex(acc)
