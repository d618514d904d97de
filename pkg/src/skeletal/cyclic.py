"""The cycling operator and navigation of its equivalence classes.

``C(g) = (g[1], ..., g[n-1], g[0] - c)``.  Two vectors of the ambient set
``S = {g : g[0] <= c, g[n-1] > 0}`` are equivalent when some power of ``C``
carries one to the other.  Each class is finite, holds exactly one Dyck
vector, and for each ``k`` exactly one k-skeletal vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from . import _kernels
from .exactnum import GroupMode, scalar
from .paths import AreaVector, Params, check_area_vector, is_dyck, is_k_skeletal, pos, area


class NotInS(ValueError):
    """Vector is outside the ambient set S."""


def cycle(g: Sequence, params: Params) -> AreaVector:
    return tuple(g[1:]) + (scalar(g[0] - params.c),)


def cycle_inv(h: Sequence, params: Params) -> AreaVector:
    return (scalar(h[-1] + params.c),) + tuple(h[:-1])


def cycle_power(g: Sequence, j: int, params: Params) -> AreaVector:
    """``C**j (g)`` for any integer ``j`` in closed form."""
    n, c = len(g), params.c
    e, p = divmod(j, n)
    head = (scalar(gi - e * c) for gi in g[p:])
    tail = (scalar(gi - (e + 1) * c) for gi in g[:p])
    return tuple(head) + tuple(tail)


def is_in_S(g: Sequence, params: Params) -> bool:
    try:
        g = check_area_vector(g, params)
    except ValueError:
        return False
    return g[0] <= params.c and g[-1] > 0


def _require_S(g: Sequence, params: Params) -> AreaVector:
    g = check_area_vector(g, params)
    if not (g[0] <= params.c and g[-1] > 0):
        raise NotInS(f"{list(map(str, g))} is not in S")
    return g


def _step_down(g: AreaVector, c) -> Optional[Tuple[AreaVector, int]]:
    n = len(g)
    s = 0
    while s < n and g[s] <= c:
        s += 1
    if s == n:
        return None
    t = 0
    while s + t < n and g[s + t] > c:
        t += 1
    j = s + t
    return tuple(g[j:]) + tuple(scalar(gi - c) for gi in g[:j]), j


def next_in_S(g: Sequence, params: Params) -> Optional[AreaVector]:
    """The next class element below ``g`` in area, or ``None`` at the bottom."""
    g = _require_S(g, params)
    step = _step_down(g, params.c)
    return None if step is None else step[0]


def dyck_offset(g: Sequence, params: Params) -> int:
    """Power ``j`` with ``C**j (g)`` the Dyck vector of the class of ``g``."""
    g = _require_S(g, params)
    if is_dyck(g):
        return 0
    c, n = params.c, len(g)
    # least e > 0 making every g_i + e*c positive
    e = max(1, max(-gi for gi in g) // c + 1)
    j = next(i for i, gi in enumerate(g) if gi + e * c <= c)
    return j - e * n


def dyck_representative(g: Sequence, params: Params) -> AreaVector:
    return cycle_power(g, dyck_offset(g, params), params)


@dataclass(frozen=True)
class ClassWalk:
    """A whole equivalence class, ordered by strictly decreasing area.

    ``elements[i] = (vector, offset)`` where ``offset`` is the power of ``C``
    taking the Dyck representative to ``vector``.
    """

    elements: Tuple[Tuple[AreaVector, int], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Tuple[AreaVector, int]]:
        return iter(self.elements)

    @property
    def vectors(self) -> List[AreaVector]:
        return [v for v, _ in self.elements]

    @property
    def dyck(self) -> AreaVector:
        return self.elements[0][0]

    def offset_of(self, g: Sequence) -> int:
        g = tuple(g)
        for v, j in self.elements:
            if v == g:
                return j
        raise KeyError("vector not in class")


def enumerate_class(g: Sequence, params: Params) -> ClassWalk:
    g = _require_S(g, params)
    top = dyck_representative(g, params)
    elements = [(top, 0)]
    cur, total = top, 0
    while True:
        step = _step_down(cur, params.c)
        if step is None:
            break
        cur, j = step
        total += j
        elements.append((cur, total))
    return ClassWalk(tuple(elements))


def brute_force_class(g: Sequence, params: Params) -> List[Tuple[AreaVector, int]]:
    """Scan a window of powers ``C**j (g)`` and keep those in S.

    Offsets are relative to ``g`` itself; the result is sorted by offset,
    which is the same as decreasing area.
    """
    g = _require_S(g, params)
    n, c = len(g), params.c
    up = max(0, max(g) // c + 1)
    down = max(0, max(-gi for gi in g) // c + 1)
    out = []
    # two extra periods each side on top of the bare bounds
    for j in range(-n * (down + 2), n * (up + 2) + 1):
        h = cycle_power(g, j, params)
        if h[0] <= c and h[-1] > 0:
            out.append((h, j))
    return out


def k_skeletal_representative(g: Sequence, k: int, params: Params) -> Tuple[AreaVector, int]:
    """The k-skeletal element of the class of ``g`` and the C-power reaching it.

    It is the smallest-area class element with ``pos > k``.
    """
    params.check_k(k)
    walk = enumerate_class(g, params)
    start = walk.offset_of(tuple(scalar(x) for x in g))
    best = None
    for v, j in walk:
        if pos(v) > k:
            best = (v, j)
    assert best is not None  # the Dyck element always qualifies
    return best[0], best[1] - start


def _map_python(g: Sequence, k: int, kp: int, params: Params) -> Tuple[AreaVector, int]:
    if not is_k_skeletal(g, k, params):
        raise ValueError(f"input is not {k}-skeletal")
    return k_skeletal_representative(g, kp, params)


def map_k_to_kprime_with_offset(g: Sequence, k: int, kp: int, params: Params) -> Tuple[AreaVector, int]:
    """Image of ``g`` and the total power of ``C`` that produced it."""
    params.check_k(k)
    params.check_k(kp)
    if params.mode is GroupMode.INTEGERS and _kernels.map_skeletal is not None:
        g = check_area_vector(g, params)
        try:
            return _kernels.map_skeletal(g, k, kp, params.m, params.c)
        except OverflowError:
            pass
    return _map_python(g, k, kp, params)


def map_k_to_kprime(g: Sequence, k: int, kp: int, params: Params) -> AreaVector:
    """Canonical bijection from k-skeletal to kp-skeletal area vectors."""
    return map_k_to_kprime_with_offset(g, k, kp, params)[0]


__all__ = [
    "ClassWalk",
    "NotInS",
    "area",
    "brute_force_class",
    "cycle",
    "cycle_inv",
    "cycle_power",
    "dyck_offset",
    "dyck_representative",
    "enumerate_class",
    "is_in_S",
    "k_skeletal_representative",
    "map_k_to_kprime",
    "map_k_to_kprime_with_offset",
    "next_in_S",
]
