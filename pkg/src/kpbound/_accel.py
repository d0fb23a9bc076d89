"""Numba switch.

Set ``KPBOUND_DISABLE_NUMBA=1`` to run every kernel through its pure-numpy
implementation.  The flag is read once at import time.
"""

from __future__ import annotations

import os

_FALSEY = {"", "0", "false", "no", "off"}

DISABLED = os.environ.get("KPBOUND_DISABLE_NUMBA", "").strip().lower() not in _FALSEY

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not DISABLED


def njit(func=None, **kwargs):
    """``numba.njit(cache=True, nogil=True)`` when numba is usable, identity otherwise."""
    kwargs.setdefault("cache", True)
    kwargs.setdefault("nogil", True)

    def wrap(f):
        if not HAVE_NUMBA:
            return f
        return numba.njit(**kwargs)(f)

    if func is None:
        return wrap
    return wrap(func)


def configure_threads() -> int | None:
    """Apply ``KPBOUND_THREADS`` to numba's thread pool; return the cap in effect."""
    raw = os.environ.get("KPBOUND_THREADS")
    if not raw:
        return None
    n = max(1, int(raw))
    if HAVE_NUMBA:
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
    return n


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
