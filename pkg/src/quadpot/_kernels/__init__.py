"""Kernel backend selection: compiled extension if built, numpy fallback.

Set ``QUADPOT_PURE_KERNELS=1`` in the environment (before import) to force
the numpy fallback, e.g. for benchmarking.  ``use_backend`` switches at
runtime; ``benchmarks/bench_kernels.py`` relies on it.
"""
import os

from . import purecore

_impls = {"pure": purecore}
try:
    from . import fastcore
    _impls["compiled"] = fastcore
except ImportError:
    fastcore = None

if os.environ.get("QUADPOT_PURE_KERNELS"):
    _active = _impls["pure"]
else:
    _active = _impls.get("compiled", _impls["pure"])


def backend_name():
    return _active.BACKEND


def available_backends():
    return dict(_impls)


def use_backend(name):
    """Select a backend by name ('pure' or 'compiled'). Returns the old name."""
    global _active
    if name not in _impls:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_impls)}")
    old = _active.BACKEND
    _active = _impls[name]
    return old


def integrand_values(zeta, alpha, beta, gamma, t, z0, use0=True, use1=True, uset=True):
    return _active.integrand_values(zeta, alpha, beta, gamma, t, z0, use0, use1, uset)


def integrand_weighted_sum(zeta, weights, alpha, beta, gamma, t, z0,
                           use0=True, use1=True, uset=True):
    return _active.integrand_weighted_sum(zeta, weights, alpha, beta, gamma, t, z0,
                                          use0, use1, uset)
