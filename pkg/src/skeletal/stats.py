"""Pair statistics on area vectors and their generating polynomials in ``t``.

A statistic sums a kernel ``F`` over ordered pairs: ``sum F(g_i - g_j)`` for
``i < j``.  When ``F(z) == F(c - z)`` the sum is unchanged by one step of the
cycling operator with the same ``c``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .exactnum import Scalar, format_scalar, scalar
from .paths import Params

HALF = Fraction(1, 2)


class StatisticError(ValueError):
    pass


@dataclass(frozen=True)
class StatKernel:
    """One of the closed family of symmetric kernels.

    ``kind`` is ``"indicator"`` (F = 1 on {0, 1}), ``"range"`` (F = 1 on
    [0, c]), ``"slope"`` (``max(0, m + 1/2 - |z - 1/2|)``) or ``"trapezoid"``
    (``max(0, m + c/2 - |z - c/2|)``).  ``center`` is the ``c`` the kernel
    is symmetric about.
    """

    kind: str
    m: Scalar = 0
    c: Scalar = 1

    def __post_init__(self):
        if self.kind not in ("indicator", "range", "slope", "trapezoid"):
            raise ValueError(f"unknown kernel {self.kind!r}")
        object.__setattr__(self, "m", scalar(self.m))
        object.__setattr__(self, "c", scalar(self.c))
        if self.kind in ("indicator", "slope") and self.c != 1:
            raise ValueError(f"{self.kind} kernel is centered at c = 1")

    @classmethod
    def indicator(cls) -> "StatKernel":
        return cls("indicator")

    @classmethod
    def range(cls, c) -> "StatKernel":
        return cls("range", 0, c)

    @classmethod
    def slope(cls, m) -> "StatKernel":
        return cls("slope", m, 1)

    @classmethod
    def trapezoid(cls, m, c) -> "StatKernel":
        return cls("trapezoid", m, c)

    @property
    def center(self) -> Scalar:
        return self.c

    def __call__(self, z: Scalar) -> Scalar:
        if self.kind == "indicator":
            return 1 if z == 0 or z == 1 else 0
        if self.kind == "range":
            return 1 if 0 <= z <= self.c else 0
        half = self.c * HALF
        return scalar(max(0, self.m + half - abs(z - half)))


class TabulatedKernel:
    """Escape hatch: a kernel given as a table plus its center.

    Symmetry is checked on every difference actually evaluated.
    """

    def __init__(self, table: Mapping, c):
        self.table: Dict[Scalar, Scalar] = {scalar(k): scalar(v) for k, v in table.items()}
        self.c = scalar(c)

    @property
    def center(self) -> Scalar:
        return self.c

    def __call__(self, z: Scalar) -> Scalar:
        z = scalar(z)
        value = self.table.get(z, 0)
        if self.table.get(scalar(self.c - z), 0) != value:
            raise StatisticError(f"kernel not symmetric at z={format_scalar(z)}")
        return value


def stat(g: Sequence, kernel: Callable) -> int:
    """``sum over i < j of kernel(g[i] - g[j])``; must come out an integer."""
    total = 0
    n = len(g)
    for i in range(n):
        gi = g[i]
        for j in range(i + 1, n):
            total += kernel(gi - g[j])
    total = scalar(total)
    if not isinstance(total, int):
        raise StatisticError(f"statistic value {format_scalar(total)} is not an integer")
    if total < 0:
        raise StatisticError("statistic value is negative")
    return total


def dinv(g: Sequence) -> int:
    return stat(g, StatKernel.indicator())


def labeled_dinv(g: Sequence, w: Sequence[int], params: Params = None) -> int:
    """Pairs ``i < j`` with ``g_i == g_j, w_i < w_j`` or ``g_i == g_j + 1, w_i > w_j``.

    Only meaningful for ``m = c = 1``.
    """
    if params is not None and (params.m != 1 or params.c != 1):
        raise StatisticError("labeled dinv needs m = c = 1")
    n = len(g)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = g[i] - g[j]
            if (d == 0 and w[i] < w[j]) or (d == 1 and w[i] > w[j]):
                count += 1
    return count


def cycle_labeled(g: Sequence, w: Sequence[int], c) -> Tuple[tuple, tuple]:
    """One step of ``C`` on a labeled path: the bottom step moves to the top."""
    return tuple(g[1:]) + (scalar(g[0] - c),), tuple(w[1:]) + (w[0],)


@dataclass(frozen=True)
class Poly:
    """Polynomial in ``t`` with nonnegative integer coefficients."""

    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Poly":
        coeffs: list = []
        for e in exponents:
            if e < 0:
                raise StatisticError("negative exponent")
            if e >= len(coeffs):
                coeffs.extend([0] * (e + 1 - len(coeffs)))
            coeffs[e] += 1
        return cls(tuple(coeffs))

    def __call__(self, t):
        return sum(a * t ** i for i, a in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(str(a) if not mono else (mono if a == 1 else f"{a}{mono}"))
        return " + ".join(terms) or "0"


def generating_poly(family: Iterable, statistic: Callable) -> Poly:
    """``sum of t**statistic(x)`` over the family."""
    return Poly.from_exponents(statistic(x) for x in family)


KERNEL_NAMES = {
    "indicator-dinv": "indicator",
    "range-dinv": "range",
    "slope-dinv": "slope",
    "trapezoid-dinv": "trapezoid",
}


def kernel_for(name: str, params: Params) -> StatKernel:
    """Kernel named on the command line, tied to the active parameters."""
    kind = KERNEL_NAMES.get(name)
    if kind is None:
        raise ValueError(f"unknown statistic {name!r}")
    if kind == "indicator":
        return StatKernel.indicator()
    if kind == "range":
        return StatKernel.range(params.c)
    if kind == "slope":
        return StatKernel.slope(params.m)
    return StatKernel.trapezoid(params.m, params.c)
