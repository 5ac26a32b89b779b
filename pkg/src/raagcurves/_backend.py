"""Select the word-kernel backend at import time.

The compiled extension is used when it imports; ``RAAGCURVES_BACKEND=python``
forces the pure-Python fallback.
"""

import os

from . import _pykernels as python_kernels

compiled_kernels = None
if os.environ.get("RAAGCURVES_BACKEND", "").lower() != "python":
    try:
        from . import _kernels as compiled_kernels  # type: ignore[no-redef]
    except ImportError:  # extension not built
        compiled_kernels = None

kernels = compiled_kernels if compiled_kernels is not None else python_kernels
MAX_COMPILED_VERTICES = 64


def for_size(n_vertices: int):
    """Kernel module able to handle a graph with ``n_vertices`` vertices."""
    if kernels is compiled_kernels and n_vertices > MAX_COMPILED_VERTICES:
        return python_kernels
    return kernels
