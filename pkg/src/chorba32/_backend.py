"""Kernel backend selection: compiled extension when available, else pure Python."""

import sys

from . import _pykernels

if sys.byteorder == "little":
    try:
        from . import _kernels as kernels

        BACKEND = "cython"
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"
else:
    # compiled kernels assume little-endian word loads
    kernels = _pykernels
    BACKEND = "python"

pykernels = _pykernels
