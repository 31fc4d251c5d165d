"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension ``_core`` is used when it imports; setting the
environment variable ``NODALSPEC_PURE=1`` forces the fallback.  ``BACKEND``
reports which one is active.
"""
import os

from . import _pure

if os.environ.get("NODALSPEC_PURE") == "1":
    _impl = _pure
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _pure

BACKEND = "python" if _impl is _pure else "compiled"

canonical_search = _impl.canonical_search
canonical_label = _impl.canonical_label
refine = _impl.refine
jacobi_eigh = _impl.jacobi_eigh
MAX_SWEEPS = _impl.MAX_SWEEPS
MAX_CANON_N = _impl.MAX_CANON_N


def compiled_available():
    try:
        from . import _core  # noqa: F401
    except ImportError:
        return False
    return True
