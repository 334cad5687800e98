"""Kernel selection: compiled Cython core when available, pure Python otherwise.

Set UNIWIENER_PURE=1 in the environment to force the pure backend.  The
benchmark in benchmarks/bench_kernels.py compares the two on the enumeration
workload.
"""

import os

from . import _purecore

if os.environ.get("UNIWIENER_PURE"):
    _impl = _purecore
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purecore

BACKEND: str = "pure" if _impl is _purecore else "compiled"

bfs_distances = _impl.bfs_distances
eccentricities = _impl.eccentricities
transmission_sum = _impl.transmission_sum
canonical_columns = _impl.canonical_columns


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by name (for tests and benchmarks)."""
    backends: dict[str, object] = {"pure": _purecore}
    try:
        from . import _fastcore

        backends["compiled"] = _fastcore
    except ImportError:
        pass
    return backends
