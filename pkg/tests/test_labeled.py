import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skeletal import labeled, paths
from skeletal.enumeration import enumerate_skf
from skeletal.labeled import LabeledPath
from skeletal.paths import Params

TABLE_1 = (4, 12, 6, 1, 12, 16, 1, 1, 16, 17, 1, 16)
TABLE_2 = (22, 0, 24, 19, 0, 4, 19, 19, 4, 5, 19, 4)


@given(st.lists(st.integers(-6, 20), min_size=1, max_size=8), st.integers(0, 3), st.integers(1, 4))
def test_function_round_trip(f, m, c):
    p = Params(len(f), m, c)
    lp = labeled.labeled_path_of_fn(f, p)
    labeled.check_labeled_path(lp, p)
    assert labeled.fn_of_labeled_path(lp, p) == tuple(f)


def test_label_rules():
    p = Params(3, 1, 1)
    with pytest.raises(ValueError):
        labeled.check_labeled_path(LabeledPath((1, 2, 3), (1, 1, 2)), p)
    # equal x in a run must carry increasing labels
    with pytest.raises(ValueError):
        labeled.check_labeled_path(LabeledPath((1, 2, 3), (2, 1, 3)), p)
    labeled.check_labeled_path(LabeledPath((1, 2, 3), (1, 2, 3)), p)


def test_rotate_labels():
    assert labeled.rotate_labels((1, 2, 3, 4), 1) == (2, 3, 4, 1)
    assert labeled.rotate_labels((1, 2, 3, 4), -1) == (4, 1, 2, 3)
    assert labeled.rotate_labels((1, 2, 3, 4), 9) == (2, 3, 4, 1)


def test_table_example():
    p = Params(12, 2, 6)
    assert labeled.is_k_skeletal_fn(TABLE_1, 7, p)
    assert labeled.map_fn_k_to_kprime(TABLE_1, 7, 4, p) == TABLE_2
    assert labeled.map_fn_k_to_kprime(TABLE_2, 4, 7, p) == TABLE_1
    assert labeled._map_fn_python(TABLE_1, 7, 4, p) == TABLE_2


@pytest.mark.parametrize("n,m,c", [(n, m, c) for n in range(1, 5) for m in range(0, 3) for c in range(1, 3)])
def test_fn_map_is_bijection(n, m, c):
    p = Params(n, m, c)
    fams = [set(enumerate_skf(k, p)) for k in range(n)]
    for k in range(n):
        for kp in range(n):
            image = {labeled.map_fn_k_to_kprime(f, k, kp, p) for f in fams[k]}
            assert image == fams[kp]


def test_fn_map_commutes_with_relabeling():
    # permuting inputs commutes with the bijection
    p = Params(4, 1, 2)
    for f in enumerate_skf(1, p)[:200]:
        image = labeled.map_fn_k_to_kprime(f, 1, 3, p)
        for sigma in itertools.permutations(range(4)):
            g = tuple(f[s] for s in sigma)
            assert labeled.map_fn_k_to_kprime(g, 1, 3, p) == tuple(image[s] for s in sigma)


def test_rational_fn_map():
    half = Fraction(1, 2)
    p = Params.of(2, Fraction(3, 2), half)
    # g = (1/2, 2) has x = (0, 0); the 0-skeletal image cycles six times
    f = (0, 0)
    out = labeled.map_fn_k_to_kprime(f, 1, 0, p)
    lp = labeled.labeled_path_of_fn(out, p)
    assert lp.g == (-1, half)
    assert labeled.map_fn_k_to_kprime(out, 0, 1, p) == f
