"""Optional numba acceleration.

Set ``PBRAUER_NUMBA=0`` to force the pure-Python/numpy kernels even when
numba is importable.  The flag is read once at import time.
"""

import os

_FLAG = os.environ.get("PBRAUER_NUMBA", "1").strip().lower()
_WANTED = _FLAG not in ("0", "false", "no", "off")

try:
    if not _WANTED:
        raise ImportError("disabled by PBRAUER_NUMBA")
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def njit(func):
    """Compile ``func`` with numba when enabled, otherwise return it unchanged."""
    if HAVE_NUMBA:
        return _njit(cache=True, nogil=True)(func)
    return func


def backend():
    return "numba" if HAVE_NUMBA else "python"
