"""Kernel backend selection.

The compiled extension ``qaffine._core`` is preferred when it imports;
otherwise the pure-Python twin ``qaffine._pycore`` is used.  Setting the
environment variable ``QAFFINE_PURE=1`` forces the fallback (useful for
the backend benchmark and for debugging).
"""

import os

from . import _pycore


def _load():
    if os.environ.get("QAFFINE_PURE"):
        return _pycore
    try:
        from . import _core
        return _core
    except ImportError:
        return _pycore


impl = _load()

BACKEND_NAME = impl.BACKEND_NAME


def available_backends():
    """Mapping of backend name -> module, for benchmarks and tests."""
    out = {"python": _pycore}
    try:
        from . import _core
        out["cython"] = _core
    except ImportError:
        pass
    return out
