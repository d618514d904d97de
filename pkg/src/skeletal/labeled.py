"""Functions ``f: [n] -> G`` encoded as labeled paths.

The path of ``f`` has its north steps at the sorted values of ``f``; the
label sequence ``w`` lists the inputs bottom to top, increasing within each
block of equal values.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence, Tuple

from .cyclic import map_k_to_kprime_with_offset
from . import _kernels
from .exactnum import GroupMode, Scalar, check_mode, scalar
from .paths import (
    AreaVector,
    InvalidVector,
    Params,
    area_vector_of_path,
    is_k_skeletal,
    path_of_area_vector,
)

FnTable = Tuple[Scalar, ...]


class LabeledPath(NamedTuple):
    g: AreaVector
    w: Tuple[int, ...]


def _coerce_fn(f: Sequence, params: Params) -> FnTable:
    f = tuple(scalar(v) for v in f)
    if len(f) != params.n:
        raise InvalidVector(f"function has {len(f)} values, expected n={params.n}")
    check_mode(f, params.mode, "function value")
    return f


def labeled_path_of_fn(f: Sequence, params: Params) -> LabeledPath:
    f = _coerce_fn(f, params)
    w = tuple(sorted(range(1, params.n + 1), key=lambda a: (f[a - 1], a)))
    xs = tuple(f[a - 1] for a in w)
    return LabeledPath(area_vector_of_path(xs, params), w)


def check_labeled_path(lp: LabeledPath, params: Params) -> LabeledPath:
    g, w = tuple(lp[0]), tuple(int(a) for a in lp[1])
    xs = path_of_area_vector(g, params)
    if sorted(w) != list(range(1, params.n + 1)):
        raise InvalidVector("label sequence is not a permutation of 1..n")
    for i in range(params.n - 1):
        if xs[i] == xs[i + 1] and not w[i] < w[i + 1]:
            raise InvalidVector(f"labels not increasing inside a run at row {i}")
    return LabeledPath(tuple(scalar(v) for v in g), w)


def fn_of_labeled_path(lp: LabeledPath, params: Params) -> FnTable:
    g, w = check_labeled_path(lp, params)
    xs = path_of_area_vector(g, params)
    f = [None] * params.n
    for x, a in zip(xs, w):
        f[a - 1] = x
    return tuple(f)


def is_k_skeletal_fn(f: Sequence, k: int, params: Params) -> bool:
    g, _ = labeled_path_of_fn(f, params)
    return is_k_skeletal(g, k, params)


def rotate_labels(w: Sequence[int], j: int) -> Tuple[int, ...]:
    """Rotate left by ``j`` places; a full turn of ``C`` (j = n) leaves ``w`` alone."""
    j %= len(w)
    return tuple(w[j:]) + tuple(w[:j])


def map_labeled_k_to_kprime(lp: LabeledPath, k: int, kp: int, params: Params) -> LabeledPath:
    g, w = check_labeled_path(lp, params)
    h, j = map_k_to_kprime_with_offset(g, k, kp, params)
    # class steps keep run boundaries, so this never fails for a valid input
    return check_labeled_path(LabeledPath(h, rotate_labels(w, j)), params)


def map_fn_k_to_kprime(f: Sequence, k: int, kp: int, params: Params) -> FnTable:
    """Canonical bijection from k-skeletal to kp-skeletal functions."""
    params.check_k(k)
    params.check_k(kp)
    if params.mode is GroupMode.INTEGERS and _kernels.map_fn_skeletal is not None:
        f = _coerce_fn(f, params)
        try:
            return _kernels.map_fn_skeletal(f, k, kp, params.m, params.c)
        except OverflowError:
            pass
    return _map_fn_python(f, k, kp, params)


def _map_fn_python(f: Sequence, k: int, kp: int, params: Params) -> FnTable:
    lp = labeled_path_of_fn(f, params)
    return fn_of_labeled_path(map_labeled_k_to_kprime(lp, k, kp, params), params)
