"""Unlabeled paths of height n, area vectors and the k-skeletal predicates.

A path is stored as the tuple ``xs`` of x-coordinates of its north-step
starts, bottom to top.  Its area vector ``g`` has ``g[i] = m*i + c - xs[i]``,
the signed horizontal distance from each north-step start to the reference
line ``x = m*y + c``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence, Tuple

from .exactnum import GroupMode, ModeError, Scalar, check_mode, is_integral, scalar

Path = Tuple[Scalar, ...]
AreaVector = Tuple[Scalar, ...]


class InvalidVector(ValueError):
    """Input violates the monotonicity invariant of paths or area vectors."""


@dataclass(frozen=True)
class Params:
    """Shared parameters: height ``n``, inverse slope ``m``, base ``c``."""

    n: int
    m: Scalar
    c: Scalar
    mode: GroupMode = GroupMode.INTEGERS

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "m", scalar(self.m))
        object.__setattr__(self, "c", scalar(self.c))
        if not self.c > 0:
            raise ValueError("c must be positive")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        check_mode((self.m, self.c), self.mode, "parameter")

    @classmethod
    def of(cls, n, m, c, mode=None) -> "Params":
        """Build params, picking Q mode automatically for non-integer m or c."""
        m, c = scalar(m), scalar(c)
        if mode is None:
            integral = is_integral(m) and is_integral(c)
            mode = GroupMode.INTEGERS if integral else GroupMode.RATIONALS
        elif isinstance(mode, str):
            mode = GroupMode.parse(mode)
        return cls(n, m, c, mode)

    def check_k(self, k: int) -> None:
        if not 0 <= k <= self.n - 1:
            raise ValueError(f"k={k} outside [0, {self.n - 1}]")


def _coerce(values: Sequence, params: Params, what: str) -> tuple:
    vals = tuple(scalar(v) for v in values)
    if len(vals) != params.n:
        raise InvalidVector(f"{what} has length {len(vals)}, expected n={params.n}")
    check_mode(vals, params.mode, what)
    return vals


def check_path(xs: Sequence, params: Params) -> Path:
    xs = _coerce(xs, params, "path")
    for i in range(len(xs) - 1):
        if xs[i] > xs[i + 1]:
            raise InvalidVector(f"path is not weakly increasing at row {i}")
    return xs


def check_area_vector(g: Sequence, params: Params) -> AreaVector:
    g = _coerce(g, params, "area vector")
    m = params.m
    for i in range(len(g) - 1):
        if g[i + 1] > g[i] + m:
            raise InvalidVector(f"g[{i + 1}] > g[{i}] + m")
    return g


def area_vector_of_path(xs: Sequence, params: Params) -> AreaVector:
    xs = check_path(xs, params)
    m, c = params.m, params.c
    return tuple(scalar(m * i + c - x) for i, x in enumerate(xs))


def path_of_area_vector(g: Sequence, params: Params) -> Path:
    g = check_area_vector(g, params)
    m, c = params.m, params.c
    return tuple(scalar(m * i + c - gi) for i, gi in enumerate(g))


def area(g: Sequence) -> Scalar:
    return scalar(sum(g))


def pos(g: Sequence) -> int:
    """Number of trailing strictly positive entries."""
    count = 0
    for gi in reversed(g):
        if gi <= 0:
            break
        count += 1
    return count


def is_dyck(g: Sequence) -> bool:
    return all(gi > 0 for gi in g)


def is_k_skeletal(g: Sequence, k: int, params: Params) -> bool:
    """Test the three area-vector conditions for k-skeletality.

    ``g[0] <= c``; the last ``k+1`` entries are positive; and no ``k+1``
    consecutive entries all exceed ``c``.
    """
    params.check_k(k)
    g = check_area_vector(g, params)
    c = params.c
    if g[0] > c:
        return False
    if pos(g) <= k:
        return False
    streak = 0
    for gi in g:
        streak = streak + 1 if gi > c else 0
        if streak > k:
            return False
    return True


def is_k_skeletal_path(xs: Sequence, k: int, params: Params) -> bool:
    """Path-level definition, kept independent of the area-vector route."""
    params.check_k(k)
    xs = check_path(xs, params)
    n, m, c = params.n, params.m, params.c
    if xs[0] < 0:
        return False
    if any(not xs[i] < m * i + c for i in range(n - k - 1, n)):
        return False
    for i in range(n - k):
        if not any(xs[j] >= m * j for j in range(i, i + k + 1)):
            return False
    return True


def runs(g: Sequence, m: Scalar) -> Tuple[int, ...]:
    """Run lengths of ``g`` in bottom-to-top order.

    A run is a maximal block where each entry exceeds the previous by ``m``.
    """
    if not g:
        return ()
    out = []
    length = 1
    for prev, cur in zip(g, g[1:]):
        if cur == prev + m:
            length += 1
        else:
            out.append(length)
            length = 1
    out.append(length)
    return tuple(out)


def run_multiset(g: Sequence, params: Params) -> Counter:
    return Counter(runs(g, params.m))


def path_runs(xs: Sequence) -> Tuple[int, ...]:
    """Run lengths of a path: blocks of north steps on a common vertical line."""
    out = []
    length = 1
    for prev, cur in zip(xs, xs[1:]):
        if cur == prev:
            length += 1
        else:
            out.append(length)
            length = 1
    out.append(length)
    return tuple(out)


def multinomial(parts: Sequence[int]) -> int:
    total = math.factorial(sum(parts))
    for r in parts:
        total //= math.factorial(r)
    return total


def function_count_for_path(g: Sequence, params: Params) -> int:
    """Number of functions whose unlabeled path has area vector ``g``."""
    return multinomial(runs(g, params.m))


def _require_integers(params: Params) -> None:
    if params.mode is not GroupMode.INTEGERS:
        raise ModeError("operation is only defined in integer mode")


def rotate_180(xs: Sequence, params: Params) -> Path:
    """Half-turn of the trapezoid; swaps 0-skeletal and (n-1)-skeletal paths.

    With ``M = m*n - m + c - 1`` the north step in row ``i`` at ``x`` lands in
    row ``n-1-i`` at ``M - x``.
    """
    _require_integers(params)
    xs = check_path(xs, params)
    n, m, c = params.n, params.m, params.c
    top = m * n - m + c - 1
    return tuple(top - xs[n - 1 - j] for j in range(n))


def step_word(xs: Sequence, start: Scalar = 0, end: Scalar = None) -> str:
    """Lattice word over {N, E} for an integer path.

    East steps run from ``start`` to the first north step and, after the last
    north step, on to ``end`` (defaults to the last x-coordinate).
    """
    if any(not is_integral(x) for x in xs):
        raise ModeError("step words need integer coordinates")
    if end is None:
        end = xs[-1]
    if xs[0] < start or end < xs[-1]:
        raise InvalidVector("word endpoints do not enclose the path")
    out = []
    here = start
    for x in xs:
        out.append("E" * (x - here))
        out.append("N")
        here = x
    out.append("E" * (end - here))
    return "".join(out)


def path_of_word(word: str, start: int = 0) -> Path:
    """Inverse of :func:`step_word`: x-coordinates of the north steps."""
    xs = []
    x = start
    for ch in word:
        if ch == "E":
            x += 1
        elif ch == "N":
            xs.append(x)
        else:
            raise ValueError(f"bad step {ch!r}")
    return tuple(xs)


def render_ascii(xs: Sequence, params: Params) -> str:
    """Grid drawing of an integer path, top row first.

    ``|`` marks a north step, ``_`` the east steps feeding into it, ``\\``
    the reference line ``x = m*y + c`` where it meets the row.
    """
    _require_integers(params)
    xs = check_path(xs, params)
    g = area_vector_of_path(xs, params)
    n, m, c = params.n, params.m, params.c
    lo = min(0, xs[0])
    width = max(xs[-1], m * (n - 1) + c) - lo + 1
    lines = []
    for i in reversed(range(n)):
        row = ["."] * width
        ref = m * i + c - lo
        if 0 <= ref < width:
            row[ref] = "\\"
        prev = xs[i - 1] if i > 0 else lo
        for x in range(prev, xs[i]):
            row[x - lo] = "_"
        row[xs[i] - lo] = "|"
        lines.append(f"{i:>3} {''.join(row)}  g={g[i]}")
    return "\n".join(lines)
