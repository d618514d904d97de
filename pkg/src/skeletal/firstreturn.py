"""Augmented m-Dyck paths, their first-return factorization, and the
explicit bijection ``phi`` onto augmented k-skeletal paths (base ``c = 1``).

Paths are words over ``N``/``E``.  An augmented m-Dyck path of height ``n``
has ``n`` north and ``m*n + 1`` east steps, keeps every point before its last
step at level ``>= 0`` and ends with an east step.  The level of ``(x, y)``
is ``m*y - x``.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterator, List, Tuple

from .paths import Params, is_k_skeletal_path, path_of_word


class InvalidWord(ValueError):
    pass


def level(x: int, y: int, m: int) -> int:
    return m * y - x


def reverse(word: str) -> str:
    return word[::-1]


def height(word: str) -> int:
    return word.count("N")


def _levels(word: str, m: int, start: int = 0) -> Iterator[int]:
    """Level after each step."""
    lev = start
    for ch in word:
        lev += m if ch == "N" else -1
        yield lev


def is_augmented_dyck(word: str, m: int) -> bool:
    if set(word) - {"N", "E"} or not word or word[-1] != "E":
        return False
    n = height(word)
    if word.count("E") != m * n + 1:
        return False
    levels = list(_levels(word, m))
    return all(lev >= 0 for lev in levels[:-1])


def is_augmented_skeletal(word: str, m: int, k: int) -> bool:
    """Membership in D_n^{m,k}: a k-skeletal path for ``c = 1`` plus a final E."""
    if set(word) - {"N", "E"} or not word or word[-1] != "E":
        return False
    n = height(word)
    if n == 0 or word.count("E") != m * n + 1 or not 0 <= k <= n - 1:
        return False
    return is_k_skeletal_path(path_of_word(word), k, Params(n, m, 1))


def north_start_levels(word: str, m: int) -> List[int]:
    """Level at the start of every north step, bottom to top."""
    out = []
    lev = 0
    for ch in word:
        if ch == "N":
            out.append(lev)
            lev += m
        else:
            lev -= 1
    return out


def satisfies_level_conditions(word: str, m: int, k: int) -> bool:
    """Skeletal conditions for ``c = 1`` phrased through levels.

    The last ``k+1`` north steps start at level ``>= 0`` and no ``k+1``
    consecutive north steps all start at level ``> 0``.
    """
    levels = north_start_levels(word, m)
    if any(lev < 0 for lev in levels[len(levels) - k - 1:]):
        return False
    streak = 0
    for lev in levels:
        streak = streak + 1 if lev > 0 else 0
        if streak > k:
            return False
    return True


def decompose(word: str, m: int) -> Tuple[str, ...]:
    """Split ``N pi_1 ... pi_{m+1}``; ``pi_j`` ends at the first visit to level ``m - j``."""
    if m < 1:
        raise InvalidWord("first-return factorization needs m >= 1")
    if not is_augmented_dyck(word, m) or height(word) < 1:
        raise InvalidWord(f"{word!r} is not an augmented {m}-Dyck path of positive height")
    pieces = []
    target = m - 1
    cut = 1
    for idx, lev in enumerate(_levels(word[1:], m, start=m), start=1):
        if lev == target:
            pieces.append(word[cut:idx + 1])
            cut = idx + 1
            target -= 1
    assert len(pieces) == m + 1 and cut == len(word)
    return tuple(pieces)


def recompose(pieces) -> str:
    return "N" + "".join(pieces)


def phi(word: str, m: int, k: int) -> str:
    """Map an augmented m-Dyck path to an augmented k-skeletal path."""
    n = height(word)
    if not is_augmented_dyck(word, m) or n < 1:
        raise InvalidWord(f"{word!r} is not an augmented {m}-Dyck path")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} outside [0, {n - 1}]")
    out = []
    while n != k + 1:
        pieces = decompose(word, m)
        sizes = [height(p) for p in pieces]
        s = 1
        while s <= m + 1 and sum(sizes[:s]) <= k:
            s += 1
        # k + 1 < n forces s <= m + 1
        assert s <= m + 1
        out.append(reverse("".join(pieces[s:])))
        out.append("N")
        out.extend(pieces[:s - 1])
        word, n = pieces[s - 1], sizes[s - 1]
        if k + 1 >= n:
            break
    out.append(word)
    return "".join(out)


def _psi_split(word: str, m: int) -> Tuple[str, str, str]:
    """Split ``w1 N w2 w3``: ``w1 N`` is the shortest prefix ending at a
    nonnegative level, ``w1 N w2`` the shortest ending at level zero."""
    lev = 0
    first = None
    for idx, ch in enumerate(word):
        lev += m if ch == "N" else -1
        if first is None:
            if lev >= 0:
                first = idx
                if lev == 0:
                    return word[:first], "", word[first + 1:]
        elif lev == 0:
            return word[:first], word[first + 1:idx + 1], word[idx + 1:]
    raise InvalidWord(f"{word!r} does not split")


def psi(word: str, m: int, k: int) -> str:
    """Inverse of :func:`phi`."""
    n = height(word)
    if not is_augmented_skeletal(word, m, k):
        raise InvalidWord(f"{word!r} is not an augmented {k}-skeletal path for m={m}")
    prefix, suffix = [], []
    while n != k + 1:
        w1, w2, w3 = _psi_split(word, m)
        prefix.append("N" + w2)
        suffix.append(reverse(w1))
        word, n = w3, height(w3)
        if k + 1 >= n:
            break
    return "".join(prefix) + word + "".join(reversed(suffix))


def fuss_catalan(n: int, m: int) -> int:
    """``binom(m*n + n, n) / (m*n + 1)``."""
    return math.comb(m * n + n, n) // (m * n + 1)


def fuss_catalan_recursive(n: int, m: int) -> int:
    """Sum over compositions of ``n - 1`` into ``m + 1`` parts of products."""
    table = [1]
    for size in range(1, n + 1):
        total = 0
        for parts in _compositions(size - 1, m + 1):
            prod = 1
            for p in parts:
                prod *= table[p]
            total += prod
        table.append(total)
    return table[n]


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def augmented_dyck_paths(n: int, m: int) -> List[str]:
    """All of D_n^m, built from x-coordinates ``0 <= x_i <= m*i`` weakly increasing."""
    out = []

    def extend(i: int, xs: list):
        if i == n:
            out.append(_word(xs, m * n + 1))
            return
        lo = xs[-1] if xs else 0
        for x in range(lo, m * i + 1):
            xs.append(x)
            extend(i + 1, xs)
            xs.pop()

    extend(0, [])
    return sorted(out)


def _word(xs, end: int) -> str:
    parts, here = [], 0
    for x in xs:
        parts.append("E" * (x - here) + "N")
        here = x
    parts.append("E" * (end - here))
    return "".join(parts)


def augmented_skeletal_paths(n: int, m: int, k: int) -> List[str]:
    """All of D_n^{m,k}, by filtering the bounding box (independent of ``phi``)."""
    out = []
    top = m * n  # x_i <= m*(n-1) + c - 1 with c = 1, plus slack
    for xs in itertools.combinations_with_replacement(range(top + 1), n):
        word = _word(xs, m * n + 1)
        if is_augmented_skeletal(word, m, k):
            out.append(word)
    return sorted(out)
