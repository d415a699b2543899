"""Backend selection for the enumeration kernel.

The compiled ``_ckernel`` extension is used when it was built; otherwise
the pure-Python ``_pykernel`` takes over.  Both expose the same
``scan_class`` and produce identical output.
"""

from __future__ import annotations

from . import _pykernel
from ._pykernel import chunk_keys

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

BACKENDS = ("cython", "python") if _ckernel is not None else ("python",)
DEFAULT_BACKEND = BACKENDS[0]

__all__ = ["BACKENDS", "DEFAULT_BACKEND", "chunk_keys", "get_scan"]


def get_scan(backend: str | None = None):
    """Return the ``scan_class`` function of ``backend`` (default: fastest available)."""
    backend = backend or DEFAULT_BACKEND
    if backend == "python":
        return _pykernel.scan_class
    if backend == "cython":
        if _ckernel is None:
            raise ValueError("the compiled kernel is not built; reinstall the package with Cython available")
        return _ckernel.scan_class
    raise ValueError(f"unknown backend {backend!r}")
