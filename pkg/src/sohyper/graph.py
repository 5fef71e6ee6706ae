"""Graph kernels with a compiled implementation and a pure-Python fallback.

The compiled module is used when it was built and ``SOHYPER_PURE`` is not
set in the environment.
"""

import os
from array import array

from . import _graph_py

if os.environ.get("SOHYPER_PURE"):
    _impl = _graph_py
else:
    try:
        from . import _graph as _impl
    except ImportError:  # extension not built
        _impl = _graph_py

COMPILED = _impl is not _graph_py


def use(compiled: bool) -> None:
    """Switch implementations at runtime (used by the benchmark)."""
    global _impl, COMPILED
    if compiled:
        from . import _graph

        _impl = _graph
    else:
        _impl = _graph_py
    COMPILED = compiled


def csr(n: int, succ) -> tuple[array, array]:
    """CSR arrays from a per-node iterable of successor ids."""
    indptr = array("i", [0])
    indices = array("i")
    for v in range(n):
        indices.extend(succ[v])
        indptr.append(len(indices))
    return indptr, indices


def scc(n, indptr, indices):
    return _impl.scc(n, indptr, indices)


def reachable(n, indptr, indices, sources):
    return _impl.reachable(n, indptr, indices, sources)


def bfs_path(n, indptr, indices, sources, targets, allowed):
    return _impl.bfs_path(n, indptr, indices, sources, bytes(targets), bytes(allowed))
