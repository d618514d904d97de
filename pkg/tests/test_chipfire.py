import itertools

import pytest
from hypothesis import given, strategies as st

from skeletal import chipfire, labeled
from skeletal.paths import Params

EX_D = (4, 1, 5, 5, 14, 8)
EX_P = Params(6, 2, 4)


def test_fire_and_borrow_example():
    assert chipfire.fire(EX_D, [5], EX_P) == (6, 3, 7, 7, 0, 10)
    assert chipfire.can_fire(EX_D, [5], EX_P)
    assert not chipfire.can_fire(EX_D, [6], EX_P)
    assert chipfire.borrow(EX_D, {1, 2, 3, 4}, EX_P) == (12, 9, 13, 13, 6, 0)
    assert chipfire.can_borrow(EX_D, [1, 2, 3, 4], EX_P)
    assert chipfire.as_mask([1, 3], 6) == 0b101 == chipfire.as_mask(0b101, 6)


def test_vertex_sets_validated():
    with pytest.raises(ValueError):
        chipfire.as_mask([], 3)
    with pytest.raises(ValueError):
        chipfire.as_mask([4], 3)
    with pytest.raises(ValueError):
        chipfire.as_mask(0, 3)


@given(st.integers(1, 7), st.integers(0, 3), st.integers(1, 3), st.data())
def test_fire_borrow_inverse(n, m, c, data):
    p = Params(n, m, c)
    D = tuple(data.draw(st.lists(st.integers(-5, 25), min_size=n, max_size=n)))
    S = data.draw(st.sets(st.integers(1, n), min_size=1))
    assert chipfire.borrow(chipfire.fire(D, S, p), S, p) == D
    assert chipfire.fire(chipfire.borrow(D, S, p), S, p) == D
    # chip count drops by c per fired vertex
    assert sum(chipfire.fire(D, S, p)) == sum(D) - c * len(S)


@pytest.mark.parametrize("n,m,c", [(n, m, c) for n in range(1, 5) for m in range(0, 3) for c in range(1, 3)])
def test_borrow_size_rule(n, m, c):
    p = Params(n, m, c)
    top = m * (n - 1) + c - 1
    for D in itertools.product(range(top + 2), repeat=n):
        for q in range(1, n + 1):
            assert chipfire.exists_legal_borrow_of_size(D, q, p) == \
                chipfire.exists_legal_borrow_of_size_brute(D, q, p)


@pytest.mark.parametrize("n,m,c", [(n, m, c) for n in range(1, 4) for m in range(0, 3) for c in range(1, 3)])
def test_three_predicates_agree(n, m, c):
    p = Params(n, m, c)
    top = m * (n - 1) + c - 1
    for D in itertools.product(range(-1, top + 2), repeat=n):
        for k in range(n):
            oracle = chipfire.is_k_skeletal_chip(D, k, p)
            assert chipfire.is_k_skeletal_chip_fast(D, k, p) == oracle
            assert chipfire.is_k_skeletal_chip_via_area(D, k, p) == oracle
            assert labeled.is_k_skeletal_fn(D, k, p) == oracle


def test_superstable_and_critical_extremes():
    # k = n-1: no nonempty set can fire at all
    p = Params(3, 1, 1)
    assert chipfire.is_k_skeletal_chip((0, 0, 0), 2, p)
    assert not chipfire.is_k_skeletal_chip((0, 0, 0), 0, p)
    assert chipfire.is_k_skeletal_chip((2, 2, 2), 0, p)
    assert not chipfire.is_k_skeletal_chip((3, 0, 0), 2, p)


def test_chip_labeled_path():
    lp = chipfire.chip_to_labeled(EX_D, EX_P)
    assert lp.g == (3, 2, 3, 5, 4, 0)
    assert lp.w == (2, 1, 3, 4, 6, 5)


def test_oracle_limit():
    p = Params(chipfire.MAX_ORACLE_N + 1, 0, 1)
    with pytest.raises(ValueError):
        chipfire.is_k_skeletal_chip((0,) * p.n, 0, p)
