"""Backend selection for the enumeration kernels.

The compiled extension (_fastcore) is preferred; the pure-Python twin
(_purecore) is the fallback and the reference in parity tests.  Set
SKEWBRACE_PURE=1 to force the fallback, e.g. for benchmarking.
"""

import os

from . import _purecore

if os.environ.get("SKEWBRACE_PURE"):
    _impl = _purecore
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purecore

BACKEND = _impl.BACKEND_NAME

close_generator_pairs = _impl.close_generator_pairs
generator_pair_scan = _impl.generator_pair_scan
quintuple_relation_scan = _impl.quintuple_relation_scan
pair_count = _impl.pair_count

pure = _purecore


def get_backend(name: str):
    """Return the kernel module for an explicit backend name."""
    if name == "pure":
        return _purecore
    if name == "compiled":
        from . import _fastcore

        return _fastcore
    if name == "auto":
        return _impl
    raise ValueError(f"unknown backend {name!r}")
