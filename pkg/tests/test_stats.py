from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skeletal import cyclic, labeled, stats
from skeletal.acceptance import kernels_for
from skeletal.enumeration import enumerate_skf, enumerate_skv
from skeletal.paths import Params
from skeletal.stats import Poly, StatisticError, StatKernel, TabulatedKernel


def test_kernel_values():
    assert [StatKernel.indicator()(z) for z in (-1, 0, 1, 2)] == [0, 1, 1, 0]
    assert [StatKernel.range(3)(z) for z in (-1, 0, 3, 4)] == [0, 1, 1, 0]
    slope = StatKernel.slope(2)
    assert [slope(z) for z in (-2, -1, 0, 1, 2, 3)] == [0, 1, 2, 2, 1, 0]
    trap = StatKernel.trapezoid(1, 2)
    assert [trap(z) for z in (-1, 0, 1, 2, 3)] == [0, 1, 2, 1, 0]
    assert StatKernel.trapezoid(0, 1)(Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("kernel", [
    StatKernel.indicator(), StatKernel.range(2), StatKernel.slope(3), StatKernel.trapezoid(2, 3),
])
def test_kernel_symmetry(kernel):
    for z in range(-10, 11):
        assert kernel(z) == kernel(kernel.center - z)


def test_center_mismatch_rejected():
    with pytest.raises(ValueError):
        StatKernel("indicator", 0, 2)
    with pytest.raises(ValueError):
        StatKernel("nonsense")


def test_tabulated_kernel():
    k = TabulatedKernel({0: 1, 2: 1, 1: 3}, 2)
    assert stats.stat((2, 1, 0), k) == 3 + 1 + 3
    bad = TabulatedKernel({0: 1}, 2)
    with pytest.raises(StatisticError):
        stats.stat((0, 0), bad)


@given(st.integers(1, 8), st.integers(0, 3), st.integers(1, 3), st.data())
def test_pointwise_invariance(n, m, c, data):
    p = Params(n, m, c)
    g = [data.draw(st.integers(-6, 6))]
    for _ in range(n - 1):
        g.append(g[-1] + m - data.draw(st.integers(0, 6)))
    h = cyclic.cycle(g, p)
    for kernel in kernels_for(p):
        assert stats.stat(g, kernel) == stats.stat(h, kernel)


def test_asymmetric_kernel_breaks_invariance():
    # F = 1 on {0} only is not symmetric about c = 1; a single cycle shows it
    p = Params(2, 1, 1)
    g = (1, 1)
    same = [sum(1 for i in range(2) for j in range(i + 1, 2) if v[i] == v[j]) for v in (g, cyclic.cycle(g, p))]
    assert same == [1, 0]


@pytest.mark.parametrize("n", range(1, 6))
def test_dinv_polys_agree_across_k(n):
    p = Params(n, 1, 1)
    polys = {stats.generating_poly(enumerate_skv(k, p), stats.dinv) for k in range(n)}
    assert len(polys) == 1


def test_labeled_dinv_cycle_invariant():
    p = Params(4, 1, 1)
    for f in enumerate_skf(0, p):
        lp = labeled.labeled_path_of_fn(f, p)
        g, w = lp
        for _ in range(4):
            g2, w2 = stats.cycle_labeled(g, w, 1)
            assert stats.labeled_dinv(g2, w2) == stats.labeled_dinv(g, w)
            g, w = g2, w2
    with pytest.raises(StatisticError):
        stats.labeled_dinv((1, 1), (1, 2), Params(2, 1, 2))


def test_statistic_must_be_integral():
    with pytest.raises(StatisticError):
        stats.stat((0, 0), TabulatedKernel({0: Fraction(1, 2), 1: Fraction(1, 2)}, 1))


def test_poly():
    poly = Poly.from_exponents([0, 1, 1, 3])
    assert poly.coeffs == (1, 2, 0, 1)
    assert str(poly) == "1 + 2t + t^3"
    assert poly(2) == 1 + 4 + 8
    assert poly.to_json() == {"coeffs": [1, 2, 0, 1]}
    assert Poly((1, 0, 0)) == Poly((1,))


def test_known_dinv_area_relation():
    p = Params(3, 1, 1)
    top = enumerate_skv(2, p)
    area_shifted = Poly.from_exponents(sum(g) - 3 for g in top)
    for k in range(3):
        assert stats.generating_poly(enumerate_skv(k, p), stats.dinv) == area_shifted
