"""Kernel selection.

The compiled extension is used when it was built; set
``HYPERCONIC_PURE_PYTHON=1`` to force the pure-Python kernels.
"""
import os

from . import _pykernels

kernels = _pykernels
BACKEND = "python"

if os.environ.get("HYPERCONIC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as kernels  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

GEOMETRIC = _pykernels.GEOMETRIC
OUTER = _pykernels.OUTER
LEFT_CONTRACTION = _pykernels.LEFT_CONTRACTION
SIGMOID = _pykernels.SIGMOID
SINE = _pykernels.SINE
