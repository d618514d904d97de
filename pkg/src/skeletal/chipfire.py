"""Chip firing on the complete graph K_{n+1} with weighted edges.

Non-sink vertices ``1..n`` are joined pairwise by edges of capacity ``m``
and to the sink ``0`` by edges of capacity ``c``.  A configuration ``D``
records the chips on the non-sink vertices only.

Vertex sets may be given as an iterable of vertices or as an ``int``
bitmask (bit ``i-1`` set for vertex ``i``).
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence, Tuple, Union

from . import _kernels
from .exactnum import GroupMode, Scalar, check_mode, scalar
from .labeled import LabeledPath, labeled_path_of_fn
from .paths import InvalidVector, Params, pos

ChipConfig = Tuple[Scalar, ...]
VertexSet = Union[int, Iterable[int]]

MAX_ORACLE_N = 62


def _config(D: Sequence, params: Params) -> ChipConfig:
    D = tuple(scalar(v) for v in D)
    if len(D) != params.n:
        raise InvalidVector(f"configuration has {len(D)} vertices, expected n={params.n}")
    check_mode(D, params.mode, "chip count")
    return D


def as_mask(S: VertexSet, n: int) -> int:
    if isinstance(S, int) and not isinstance(S, bool):
        mask = S
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#b} has bits outside [1, {n}]")
    else:
        mask = 0
        for v in S:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} outside [1, {n}]")
            mask |= 1 << (v - 1)
    if not mask:
        raise ValueError("vertex set must be nonempty")
    return mask


def fire(D: Sequence, S: VertexSet, params: Params) -> ChipConfig:
    """Fire every vertex of ``S`` at once (no legality check)."""
    D = _config(D, params)
    n, m, c = params.n, params.m, params.c
    mask = as_mask(S, n)
    f = bin(mask).count("1")
    loss, gain = m * (n - f) + c, m * f
    return tuple(scalar(d - loss if mask >> i & 1 else d + gain) for i, d in enumerate(D))


def borrow(D: Sequence, T: VertexSet, params: Params) -> ChipConfig:
    """Inverse of :func:`fire` on the same set."""
    D = _config(D, params)
    n, m, c = params.n, params.m, params.c
    mask = as_mask(T, n)
    p = bin(mask).count("1")
    gain, loss = m * (n - p) + c, m * p
    return tuple(scalar(d + gain if mask >> i & 1 else d - loss) for i, d in enumerate(D))


def can_fire(D: Sequence, S: VertexSet, params: Params) -> bool:
    D = _config(D, params)
    n = params.n
    mask = as_mask(S, n)
    need = params.m * (n - bin(mask).count("1")) + params.c
    return all(D[i] >= need for i in range(n) if mask >> i & 1)


def can_borrow(D: Sequence, T: VertexSet, params: Params) -> bool:
    D = _config(D, params)
    n = params.n
    mask = as_mask(T, n)
    need = params.m * bin(mask).count("1")
    return all(D[i] >= need for i in range(n) if not mask >> i & 1)


def chip_to_labeled(D: Sequence, params: Params) -> LabeledPath:
    return labeled_path_of_fn(D, params)


def exists_legal_borrow_of_size(D: Sequence, p: int, params: Params) -> bool:
    """Whether some ``p``-subset can legally borrow, read off the area vector."""
    D = _config(D, params)
    if not 1 <= p <= params.n:
        raise ValueError(f"subset size {p} outside [1, {params.n}]")
    if any(d < 0 for d in D):
        raise ValueError("criterion assumes a nonnegative configuration")
    g, _ = chip_to_labeled(D, params)
    return p == params.n or g[p] <= params.c


def exists_legal_borrow_of_size_brute(D: Sequence, p: int, params: Params) -> bool:
    D = _config(D, params)
    return any(can_borrow(D, T, params) for T in combinations(range(1, params.n + 1), p))


def _some_fire_of_size(D: ChipConfig, f: int, params: Params) -> bool:
    # the f richest vertices fire iff any f-subset does
    richest = sorted(D)[-f]
    return richest >= params.m * (params.n - f) + params.c


def _satisfies_c1(D: ChipConfig, k: int, params: Params) -> bool:
    return not any(_some_fire_of_size(D, f, params) for f in range(1, k + 2))


def is_k_skeletal_chip(D: Sequence, k: int, params: Params) -> bool:
    """Definition-level check: scan every firing and borrowing subset.

    Exponential in ``n``; meant as the oracle for :func:`is_k_skeletal_chip_fast`.
    """
    params.check_k(k)
    D = _config(D, params)
    if params.n > MAX_ORACLE_N:
        raise ValueError(f"oracle limited to n <= {MAX_ORACLE_N}")
    if params.mode is GroupMode.INTEGERS and params.n <= 24:
        try:
            return _kernels.skeletal_chip_naive(D, k, params.m, params.c)
        except OverflowError:
            pass
    return _kernels.skeletal_chip_naive_generic(D, k, params.m, params.c)


def is_k_skeletal_chip_fast(D: Sequence, k: int, params: Params) -> bool:
    """Polynomial check through the sorted configuration and its area vector."""
    params.check_k(k)
    D = _config(D, params)
    n, c = params.n, params.c
    if any(d < 0 for d in D):
        return False
    if not _satisfies_c1(D, k, params):
        return False
    g, w = chip_to_labeled(D, params)
    for p in range(1, n + 1):
        if (p == n or g[p] <= c) and g[p - 1] > c:
            after = borrow(D, w[:p], params)
            if _satisfies_c1(after, k, params):
                return False
    return True


def is_k_skeletal_chip_via_area(D: Sequence, k: int, params: Params) -> bool:
    """Same predicate through the area vector: ``pos`` of the cycled vectors."""
    params.check_k(k)
    D = _config(D, params)
    if any(d < 0 for d in D):
        return False
    g, _ = chip_to_labeled(D, params)
    if pos(g) <= k:
        return False
    n, c = params.n, params.c
    for p in range(1, n + 1):
        if (p == n or g[p] <= c) and g[p - 1] > c:
            cycled = tuple(g[p:]) + tuple(gi - c for gi in g[:p])
            if pos(cycled) > k:
                return False
    return True
