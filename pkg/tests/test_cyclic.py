from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skeletal import cyclic, paths
from skeletal.cyclic import NotInS
from skeletal.enumeration import enumerate_skv
from skeletal.paths import Params


@st.composite
def s_vectors(draw, max_n=6):
    """Area vectors with g_0 <= c and g_{n-1} > 0."""
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, 3))
    c = draw(st.integers(1, 4))
    p = Params(n, m, c)
    g = [draw(st.integers(-10, c))]
    for _ in range(n - 1):
        g.append(g[-1] + m - draw(st.integers(0, 5)))
    if g[-1] <= 0:
        shift = 1 - g[-1]
        g = [x + shift for x in g]
        if g[0] > c:
            return draw(st.nothing())
    return p, tuple(g)


def test_cycle_and_inverse():
    p = Params(4, 2, 3)
    g = (3, 5, 1, 2)
    assert cyclic.cycle(g, p) == (5, 1, 2, 0)
    assert cyclic.cycle_inv(cyclic.cycle(g, p), p) == g


@given(st.integers(1, 6), st.integers(0, 3), st.integers(1, 3), st.integers(-40, 40), st.data())
def test_power_closed_form(n, m, c, j, data):
    p = Params(n, m, c)
    g = tuple(data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n)))
    step = cyclic.cycle if j >= 0 else cyclic.cycle_inv
    h = g
    for _ in range(abs(j)):
        h = step(h, p)
    assert cyclic.cycle_power(g, j, p) == h


def test_in_S():
    p = Params(3, 1, 1)
    assert cyclic.is_in_S((1, 1, 1), p)
    assert not cyclic.is_in_S((2, 1, 1), p)
    assert not cyclic.is_in_S((1, 1, 0), p)
    with pytest.raises(NotInS):
        cyclic.enumerate_class((2, 1, 1), p)


@settings(max_examples=300)
@given(s_vectors())
def test_walk_matches_scan(case):
    p, g = case
    walk = cyclic.enumerate_class(g, p)
    scan = sorted(cyclic.brute_force_class(g, p), key=lambda e: e[1])
    dj = cyclic.dyck_offset(g, p)
    assert [v for v, _ in scan] == walk.vectors
    assert [j - dj for _, j in scan] == [j for _, j in walk]
    assert paths.is_dyck(walk.dyck)
    areas = [paths.area(v) for v in walk.vectors]
    assert areas == sorted(areas, reverse=True) and len(set(areas)) == len(areas)


@settings(max_examples=300)
@given(s_vectors())
def test_one_representative_per_k(case):
    p, g = case
    members = cyclic.enumerate_class(g, p).vectors
    for k in range(p.n):
        hits = [v for v in members if paths.is_k_skeletal(v, k, p)]
        assert len(hits) == 1
        h, j = cyclic.k_skeletal_representative(g, k, p)
        assert h == hits[0]
        assert cyclic.cycle_power(g, j, p) == h


@pytest.mark.parametrize("n,m,c", [(n, m, c) for n in range(1, 6) for m in range(0, 3) for c in range(1, 3)])
def test_map_is_bijection(n, m, c):
    p = Params(n, m, c)
    fams = [set(enumerate_skv(k, p)) for k in range(n)]
    for k in range(n):
        for kp in range(n):
            image = {cyclic.map_k_to_kprime(g, k, kp, p) for g in fams[k]}
            assert image == fams[kp]
            for g in fams[k]:
                assert cyclic.map_k_to_kprime(cyclic.map_k_to_kprime(g, k, kp, p), kp, k, p) == g


def test_map_rejects_wrong_family():
    p = Params(3, 1, 1)
    with pytest.raises(ValueError):
        cyclic.map_k_to_kprime((-1, 0, 1), 2, 0, p)


def test_rational_cycling():
    p = Params.of(2, Fraction(3, 2), Fraction(1, 2))
    half = Fraction(1, 2)
    assert cyclic.cycle_power((half, 2), 6, p) == (-1, half)
    assert cyclic.map_k_to_kprime((half, 1), 1, 0, p) == (0, half)
    assert cyclic.map_k_to_kprime((-1, half), 0, 1, p) == (half, 2)
    walk = cyclic.enumerate_class((half, 2), p)
    scan = sorted(cyclic.brute_force_class((half, 2), p), key=lambda e: e[1])
    assert walk.vectors == [v for v, _ in scan]
    assert (-1, half) in walk.vectors


def test_example_class():
    p = Params(14, 1, 4)
    g = (3, 4, 5, 5, 2, -1, 0, 1, 2, 3, 3, 0, 1, 2)
    walk = cyclic.enumerate_class(g, p)
    assert [j for _, j in walk] == [0, 6, 9, 13]
    assert walk.offset_of(g) == 9
    assert [paths.pos(v) for v in walk.vectors] == [14, 4, 2, 2]
    h, j = cyclic.k_skeletal_representative(g, 0, p)
    assert j == 4 and h == (2, -1, 0, 1, 2, 3, 3, 0, 1, 2, -1, 0, 1, 1)
