"""Small hand-checked values, one assertion group per operation."""
import math
from fractions import Fraction

from skeletal import chipfire, cyclic, labeled, paths, stats
from skeletal.exactnum import scalar_add, scalar_cmp, scalar_sub
from skeletal.paths import Params
from skeletal.enumeration import enumerate_skv

HALF = Fraction(1, 2)


def test_scalars():
    assert scalar_add(HALF, Fraction(3, 2)) == 2 and isinstance(scalar_add(HALF, Fraction(3, 2)), int)
    assert scalar_sub(2, HALF) == Fraction(3, 2)
    assert scalar_cmp(-1, HALF) == -1


def test_path_vectors():
    assert paths.area_vector_of_path((0, 1, 2), Params(3, 1, 1)) == (1, 1, 1)
    p = Params(5, 2, 3)
    assert paths.area_vector_of_path((0,) * 5, p) == (3, 5, 7, 9, 11)
    assert paths.path_of_area_vector((3, 5, 7, 9, 11), p) == (0,) * 5
    assert paths.path_of_area_vector((3, 2, 3, 5, 4, 0), Params(6, 2, 4)) == (1, 4, 5, 5, 8, 14)


def test_pos_values():
    assert paths.pos((3, 4, 5, 6, 7, 7, 4, 5, 6, 3, 4, 5, 5, 2)) == 14
    assert paths.pos((4, 5, 6, 3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3)) == 4
    assert paths.pos((5, 3, 0)) == 0


def test_skeletal_values():
    assert paths.is_k_skeletal((1, 2, 3), 2, Params(3, 1, 1))


def test_runs_and_counts():
    assert sorted(paths.runs((3, 4, 5, 6, 7, 7, 4, 5, 6, 3, 4, 5, 5, 2), 1)) == sorted([5, 1, 3, 3, 1, 1])
    assert paths.runs((9, 5, 2, 0), 1) == (1, 1, 1, 1)
    assert paths.multinomial([4, 1, 1, 2, 3, 1]) == 1663200
    assert paths.multinomial([6]) == 1
    assert paths.multinomial([1] * 6) == math.factorial(6)
    g = (5, 7, 9, 11, 10, 10, 6, 8, 6, 8, 10, 11)
    assert paths.function_count_for_path(g, Params(12, 2, 6)) == 1663200


def test_cycling_values():
    p = Params.of(2, Fraction(3, 2), HALF)
    h = (-1, HALF)
    for _ in range(6):
        h = cyclic.cycle_inv(h, p)
    assert h == (HALF, 2)
    assert cyclic.cycle_power((HALF, 1), 2, p) == (0, HALF)


def test_membership_in_S():
    assert not cyclic.is_in_S((3, 2, 3, 5, 4, 0), Params(6, 2, 4))
    assert cyclic.is_in_S((1, 1, 1), Params(3, 1, 1))
    assert not cyclic.is_in_S((2, 3, 4), Params(3, 1, 1))


def test_next_and_dyck():
    p = Params(12, 2, 6)
    g = (5, 7, 9, 11, 10, 10, 6, 8, 6, 8, 10, 11)
    assert cyclic.next_in_S(g, p) == (6, 8, 6, 8, 10, 11, -1, 1, 3, 5, 4, 4)
    assert cyclic.next_in_S((1, 1, 1), Params(3, 1, 1)) is None
    assert cyclic.dyck_representative(g, p) == g and cyclic.dyck_offset(g, p) == 0
    assert cyclic.enumerate_class((1, 1, 1), Params(3, 1, 1)).vectors == [(1, 1, 1)]


def test_representatives():
    p = Params(14, 1, 4)
    gplus = (3, 4, 5, 6, 7, 7, 4, 5, 6, 3, 4, 5, 5, 2)
    assert cyclic.k_skeletal_representative(gplus, 0, p) == ((2, -1, 0, 1, 2, 3, 3, 0, 1, 2, -1, 0, 1, 1), 13)
    assert cyclic.k_skeletal_representative(gplus, 5, p) == (gplus, 0)
    for g in enumerate_skv(1, Params(4, 2, 2)):
        assert cyclic.map_k_to_kprime(g, 1, 1, Params(4, 2, 2)) == g


def test_labels():
    p = Params(5, 1, 1)
    assert labeled.labeled_path_of_fn((0,) * 5, p).w == (1, 2, 3, 4, 5)
    assert labeled.labeled_path_of_fn((3, 0, 4, 1, 2), p).w == (2, 4, 5, 1, 3)
    table_2 = (22, 0, 24, 19, 0, 4, 19, 19, 4, 5, 19, 4)
    q = Params(12, 2, 6)
    lp = labeled.labeled_path_of_fn(table_2, q)
    assert lp.g == (6, 8, 6, 8, 10, 11, -1, 1, 3, 5, 4, 4)
    assert lp.w == (2, 5, 6, 9, 12, 10, 4, 7, 8, 11, 1, 3)
    assert labeled.is_k_skeletal_fn(table_2, 4, q)
    for f in [(2, 2, 2), (0, 2, 2), (2, 0, 2)]:
        assert labeled.map_fn_k_to_kprime(f, 0, 0, Params(3, 1, 1)) == f


def test_chip_values():
    p = Params(6, 2, 4)
    D = (4, 1, 5, 5, 14, 8)
    assert chipfire.fire(D, range(1, 7), p) == tuple(d - 4 for d in D)
    assert not any(chipfire.can_fire((0,) * 4, S, Params(4, 1, 1)) for S in range(1, 16))
    assert chipfire.can_borrow(D, range(1, 7), p)
    # borrow everywhere but the richest vertex (14 >= m(n-1) = 10)
    assert chipfire.can_borrow(D, [1, 2, 3, 4, 6], p)
    assert not chipfire.is_k_skeletal_chip((0, -1, 2), 0, Params(3, 1, 1))


def test_statistic_values():
    assert stats.dinv((1, 1, 1)) == 3
    assert stats.dinv((1, 2, 3)) == 0
    for kernel in (stats.StatKernel.indicator(), stats.StatKernel.trapezoid(2, 3)):
        assert stats.stat((5,), kernel) == 0
    assert stats.labeled_dinv((1, 1, 1), (1, 2, 3)) == 3
    assert stats.labeled_dinv((1, 2, 3), (3, 1, 2)) == 0
    p = Params(3, 1, 1)
    top = stats.generating_poly(enumerate_skv(2, p), stats.dinv)
    assert top.coeffs == (1, 2, 1, 1)
    assert stats.generating_poly(enumerate_skv(0, p), stats.dinv) == top
    assert stats.generating_poly([], stats.dinv).coeffs == ()
