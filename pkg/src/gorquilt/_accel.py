"""Backend selection for the enumeration kernels.

``GORQUILT_KERNEL=numpy`` forces the vectorised numpy path; the default is
numba when it imports, numpy otherwise.
"""

import os

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    HAVE_NUMBA = False

    def njit(*args, **kw):
        if len(args) == 1 and callable(args[0]) and not kw:
            return args[0]
        return lambda f: f


BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    requested = os.environ.get("GORQUILT_KERNEL", "").strip().lower()
    if requested in BACKENDS:
        if requested == "numba" and not HAVE_NUMBA:
            return "numpy"
        return requested
    if requested:
        raise ValueError(f"GORQUILT_KERNEL must be one of {BACKENDS}, got {requested!r}")
    return "numba" if HAVE_NUMBA else "numpy"


def resolve_backend(backend=None) -> str:
    if backend is None:
        return default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        return "numpy"
    return backend
