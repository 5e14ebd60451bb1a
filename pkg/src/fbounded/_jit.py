"""Backend selection for the hot kernels.

Set ``FBOUNDED_DISABLE_JIT=1`` to run every kernel through its pure
numpy/Python path. Numba is also bypassed when it cannot be imported.
"""
import os

_DISABLED = os.environ.get("FBOUNDED_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False
    _njit = None


def njit(func=None, **options):
    """``numba.njit`` when the JIT backend is active, identity otherwise."""
    options.setdefault("cache", True)

    def wrap(f):
        if HAS_NUMBA:
            return _njit(**options)(f)
        return f

    if func is None:
        return wrap
    return wrap(func)


def backend() -> str:
    return "numba" if HAS_NUMBA else "numpy"
