"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over. ``use_backend`` switches explicitly (tests and benchmarks
run both).
"""
from array import array

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def backend_name():
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name):
    """Select ``"cython"`` or ``"python"``; returns the previously active name."""
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable (have {sorted(BACKENDS)})")
    previous = backend_name()
    _active = BACKENDS[name]
    return previous


def _ints(seq):
    return array("i", seq)


def all_pairs_bfs(n, ptr, idx):
    return _active.all_pairs_bfs(n, _ints(ptr), _ints(idx))


def boundary_scan(n, dist, ptr, idx):
    return _active.boundary_scan(n, _ints(dist), _ints(ptr), _ints(idx))


def triangle_violation(n, dist):
    return _active.triangle_violation(n, _ints(dist))
