"""Pick the compiled kernels when built, else the pure-Python ones.

Set ``SKELETAL_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

skeletal_chip_naive_generic = _pykernels.skeletal_chip_naive_generic

if os.environ.get("SKELETAL_PURE_PYTHON", "") not in ("", "0"):
    BACKEND = "python"
else:
    try:
        from . import _ckernels
        BACKEND = "cython"
    except ImportError:
        BACKEND = "python"

if BACKEND == "cython":
    enumerate_skv = _ckernels.enumerate_skv
    skeletal_chip_naive = _ckernels.skeletal_chip_naive
    map_skeletal = _ckernels.map_skeletal
    map_fn_skeletal = _ckernels.map_fn_skeletal
else:
    enumerate_skv = _pykernels.enumerate_skv
    skeletal_chip_naive = _pykernels.skeletal_chip_naive
    # the generic routes in ``cyclic`` and ``labeled`` already are the fallback
    map_skeletal = None
    map_fn_skeletal = None

__all__ = [
    "BACKEND",
    "enumerate_skv",
    "map_fn_skeletal",
    "map_skeletal",
    "skeletal_chip_naive",
    "skeletal_chip_naive_generic",
]
