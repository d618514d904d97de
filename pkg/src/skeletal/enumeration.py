"""Exhaustive integer-mode generators and the closed-form counts they must hit."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Tuple

from . import _kernels
from .exactnum import GroupMode, ModeError
from .labeled import FnTable
from .paths import AreaVector, Params, is_k_skeletal, path_of_area_vector, runs


class CountMismatch(AssertionError):
    """An enumerated family disagrees with its closed-form size."""


def _integer_params(params: Params) -> None:
    if params.mode is not GroupMode.INTEGERS:
        raise ModeError("families are infinite outside integer mode")


def enumerate_skv(k: int, params: Params) -> List[AreaVector]:
    """All k-skeletal integer area vectors, sorted lexicographically."""
    _integer_params(params)
    params.check_k(k)
    return _kernels.enumerate_skv(params.n, params.m, params.c, k)


def enumerate_skv_brute(k: int, params: Params) -> List[AreaVector]:
    """Filter every weakly increasing path in the bounding box; no pruning."""
    _integer_params(params)
    params.check_k(k)
    n, m, c = params.n, params.m, params.c
    top = m * (n - 1) + c - 1
    out = []
    for xs in itertools.combinations_with_replacement(range(top + 1), n):
        g = tuple(m * i + c - x for i, x in enumerate(xs))
        if is_k_skeletal(g, k, params):
            out.append(g)
    out.sort()
    return out


def _label_sequences(block_sizes: Tuple[int, ...], labels: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    if not block_sizes:
        yield ()
        return
    first, rest = block_sizes[0], block_sizes[1:]
    for chosen in itertools.combinations(labels, first):
        remaining = tuple(a for a in labels if a not in chosen)
        for tail in _label_sequences(rest, remaining):
            yield chosen + tail


def functions_of_area_vector(g: AreaVector, params: Params) -> Iterator[FnTable]:
    """Every function whose unlabeled path has area vector ``g``."""
    xs = path_of_area_vector(g, params)
    n = params.n
    for w in _label_sequences(runs(g, params.m), tuple(range(1, n + 1))):
        f = [0] * n
        for x, a in zip(xs, w):
            f[a - 1] = x
        yield tuple(f)


def enumerate_skf(k: int, params: Params) -> List[FnTable]:
    """All k-skeletal integer functions, grouped by path in path order."""
    out = []
    for g in enumerate_skv(k, params):
        out.extend(functions_of_area_vector(g, params))
    return out


def ballot_count(params: Params) -> int:
    """``c/((m+1)n+c) * binom((m+1)n+c, n)``."""
    _integer_params(params)
    n, m, c = params.n, params.m, params.c
    top = (m + 1) * n + c
    value = Fraction(c, top) * math.comb(top, n)
    assert value.denominator == 1
    return int(value)


def parking_count(params: Params) -> int:
    """``c * (m*n + c)**(n-1)``."""
    _integer_params(params)
    n, m, c = params.n, params.m, params.c
    return c * (m * n + c) ** (n - 1)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass
class CountReport:
    params: Params
    family: str
    counts: List[int] = field(default_factory=list)
    formula: int = 0

    @property
    def match(self) -> bool:
        return all(x == self.formula for x in self.counts)

    def rows(self):
        """CSV rows: n, m, c, k, count, formula, match."""
        p = self.params
        for k, count in enumerate(self.counts):
            yield (p.n, p.m, p.c, k, count, self.formula, count == self.formula)


def count_report(params: Params, family: str = "skv") -> CountReport:
    if family == "skv":
        counts = [len(enumerate_skv(k, params)) for k in range(params.n)]
        formula = ballot_count(params)
    elif family == "skf":
        counts = [len(enumerate_skf(k, params)) for k in range(params.n)]
        formula = parking_count(params)
    else:
        raise ValueError(f"unknown family {family!r}")
    return CountReport(params, family, counts, formula)


def verify_grid(n_range, m_range, c_range, family: str = "skv", strict: bool = True) -> List[CountReport]:
    """Count reports over a parameter grid.

    Each range may also be a plain maximum: ``n`` and ``c`` then start at 1,
    ``m`` at 0.  With ``strict`` the first mismatch raises
    :class:`CountMismatch` naming the offending ``(n, m, c, k)``.
    """
    if isinstance(n_range, int):
        n_range = range(1, n_range + 1)
    if isinstance(m_range, int):
        m_range = range(0, m_range + 1)
    if isinstance(c_range, int):
        c_range = range(1, c_range + 1)
    reports = []
    for n, m, c in itertools.product(n_range, m_range, c_range):
        rep = count_report(Params(n, m, c), family)
        if strict and not rep.match:
            k = next(i for i, x in enumerate(rep.counts) if x != rep.formula)
            raise CountMismatch(
                f"{family} count {rep.counts[k]} != {rep.formula} at n={n} m={m} c={c} k={k}"
            )
        reports.append(rep)
    return reports
