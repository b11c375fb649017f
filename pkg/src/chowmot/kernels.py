"""Backend selection for the hot multiplication kernel.

The compiled extension is preferred; set ``CHOWMOT_PURE_PYTHON=1`` to force
the pure-Python fallback (both give identical results).
"""
import os

from . import _kernels_py

if os.environ.get("CHOWMOT_PURE_PYTHON"):
    _ext = None
else:
    try:
        from . import _kernels as _ext
    except ImportError:
        _ext = None

if _ext is not None:
    truncated_mul = _ext.truncated_mul
    BACKEND = "cython"
else:
    truncated_mul = _kernels_py.truncated_mul
    BACKEND = "python"

__all__ = ["truncated_mul", "BACKEND"]
