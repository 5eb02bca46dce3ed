"""Numba acceleration switch.

Hot kernels are JIT-compiled when numba is importable and the environment
variable PICFLOW_DISABLE_NUMBA is unset.  Setting PICFLOW_DISABLE_NUMBA=1
selects the pure-numpy fallback path.  Both paths are exercised by the test
suite and timed against each other by benchmarks/bench_kernels.py.
"""

import os


def _env_disabled() -> bool:
    return os.environ.get("PICFLOW_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}


try:
    import numba as _numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _env_disabled()


def njit_or_plain(fn=None, **kwargs):
    """Apply numba.njit when acceleration is on, otherwise return fn unchanged."""
    def wrap(f):
        if USE_NUMBA:
            return _numba.njit(f, cache=True, **kwargs)
        return f

    if fn is None:
        return wrap
    return wrap(fn)


def force_njit(fn, **kwargs):
    """Compile fn regardless of the env switch (benchmark use). None if no numba."""
    if not HAVE_NUMBA:
        return None
    return _numba.njit(fn, cache=True, **kwargs)
