"""Skeletal paths, skeletal functions and weighted chip firing.

Integer- and rational-valued lattice paths in a trapezoid, the cycling
operator that links the k-skeletal families for different ``k``, labeled
versions (functions), a chip-firing model on a weighted complete graph,
the first-return bijection for ``c = 1`` and cycling-invariant statistics.
"""
from ._kernels import BACKEND
from .exactnum import GroupMode, ModeError, Scalar, format_scalar, parse_scalar, scalar
from .paths import Params

__all__ = [
    "BACKEND",
    "GroupMode",
    "ModeError",
    "Params",
    "Scalar",
    "format_scalar",
    "parse_scalar",
    "scalar",
]
__version__ = "0.1.0"
