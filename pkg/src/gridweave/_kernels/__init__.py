"""Backend selection for the hot kernels.

The compiled module is used when it was built; ``GRIDWEAVE_PURE_PYTHON=1``
forces the numpy fallback.
"""

import importlib
import os

_NAMES = ("python", "cython")


def load_backend(name):
    """Import a specific backend module; ImportError if it is unavailable."""
    if name == "cython":
        return importlib.import_module("gridweave._kernels._ckernels")
    if name == "python":
        return importlib.import_module("gridweave._kernels._pykernels")
    raise ValueError(f"unknown backend {name!r}; expected one of {_NAMES}")


def available_backends():
    found = []
    for name in _NAMES:
        try:
            load_backend(name)
        except ImportError:
            continue
        found.append(name)
    return found


if os.environ.get("GRIDWEAVE_PURE_PYTHON") == "1":
    _impl = load_backend("python")
else:
    try:
        _impl = load_backend("cython")
    except ImportError:
        _impl = load_backend("python")

BACKEND = _impl.BACKEND
find_conflicts = _impl.find_conflicts
candidate_ok = _impl.candidate_ok
segment_conflict = _impl.segment_conflict
collinear_extension_histogram = _impl.collinear_extension_histogram
coplanar_origin_triples = _impl.coplanar_origin_triples
coplanar_4sets = _impl.coplanar_4sets
