"""Right-angled Artin/Coxeter word arithmetic, diagonal embeddings and curve systems."""

from ._backend import kernels as _kernels

BACKEND = _kernels.BACKEND

__version__ = "0.1.0"
