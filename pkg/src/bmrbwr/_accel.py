"""Optional numba acceleration.

Set ``BMRBWR_DISABLE_NUMBA=1`` to force the pure-numpy kernels (also used when
numba is not importable).
"""

import os

_FALSY = {"", "0", "false", "no", "off"}

DISABLED_BY_ENV = os.environ.get("BMRBWR_DISABLE_NUMBA", "").strip().lower() not in _FALSY

try:
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn

USE_NUMBA = HAS_NUMBA and not DISABLED_BY_ENV
