import math

import numpy as np
import pytest

from hgc.groups import build_group
from hgc.multipliers import (Constant, Derivative, DyadicHomogeneous,
                             Gaussian, JapaneseBracket, LinearCombination,
                             Multiplier, Product, RieszType,
                             SmoothedNormPower, annulus_points,
                             bracket_order, build_multiplier, estimate_order,
                             symbol_order)


@pytest.fixture
def line():
    return build_group('euclidean:1')


@pytest.fixture
def heisenberg():
    return build_group('heisenberg:1')


def test_build_multiplier(line, heisenberg):
    m = build_multiplier('JapaneseBracket', line)
    assert isinstance(m, JapaneseBracket)
    assert m.order == 1.0

    m = build_multiplier(dict(type='JapaneseBracket', power=1), heisenberg)
    assert m.order == 2.0
    m = build_multiplier(
        dict(type='JapaneseBracket', power=-1, group='heisenberg:1'))
    assert m.group.dim == 3
    assert m.order == -1.0

    # multiplier order to Euclidean symbol order
    assert symbol_order(m.group, m.order) == -0.5
    assert symbol_order(heisenberg, bracket_order(heisenberg, 1.0)) == 2.0
    assert bracket_order(line, -2.0) == symbol_order(line, -2.0) == -2.0

    m = build_multiplier(
        dict(
            type='Product',
            factors=['Constant',
                     dict(type='SmoothedNormPower', order=2)]), line)
    assert isinstance(m, Product)
    assert m.order == 2.0
    assert build_multiplier(m) is m

    m = build_multiplier(
        dict(type='Derivative', base='SmoothedNormPower', alpha=[1]), line)
    assert m.order == 0.0

    with pytest.raises(KeyError):
        build_multiplier('Unknown', line)


def test_multiplier_base(line):
    m = Multiplier(line, 2.0, func=lambda xi: xi[..., 0]**2, name='square')
    assert repr(m) == 'square(order=2)'
    np.testing.assert_allclose(m([[1.0], [3.0]]), [1.0, 9.0])
    assert m.dilated(2.0)([[3.0]])[0] == 36.0
    with pytest.raises(NotImplementedError):
        Multiplier(line)([[0.0]])


def test_closed_forms(line, heisenberg):
    xi = np.array([[0.0], [3.0], [-4.0]])
    np.testing.assert_allclose(
        Constant(line, 2.0)(xi), np.full(3, 2.0))
    np.testing.assert_allclose(
        JapaneseBracket(line, 1)(xi), np.sqrt([1.0, 10.0, 17.0]))
    np.testing.assert_allclose(
        SmoothedNormPower(line, 1)(xi), np.sqrt([1.0, 10.0, 17.0]))
    np.testing.assert_allclose(
        Gaussian(line, 2.0)(xi), np.exp(-np.pi * xi[:, 0]**2 / 4.0))

    rng = np.random.default_rng(0)
    points = rng.normal(size=(64, 3)) * 5.0
    values = SmoothedNormPower(heisenberg, 2)(points)
    np.testing.assert_allclose(values**2 - 1.0,
                               heisenberg.norm(points)**4, rtol=1e-10)


def test_dyadic_homogeneous(heisenberg):
    m = DyadicHomogeneous(heisenberg, order=1.5, amplitude=0.3)
    rng = np.random.default_rng(1)
    points = rng.normal(size=(32, 3)) * 4.0
    points = points[heisenberg.norm(points) >= 1.0]
    np.testing.assert_allclose(
        m(heisenberg.dilate(points, 2.0)), 2.0**1.5 * m(points), rtol=1e-10)
    assert m(np.zeros((1, 3)))[0] == 0.0
    with pytest.raises(ValueError):
        DyadicHomogeneous(heisenberg, amplitude=1.0)


def test_riesz_type(line, heisenberg):
    m = RieszType(line)
    np.testing.assert_allclose(m([[3.0], [-3.0], [0.1]]), [1.0, -1.0, 0.0])
    assert m.order == 0.0
    with pytest.raises(ValueError):
        RieszType(heisenberg, axis=3)


def test_derivative(line):
    m = JapaneseBracket(line, 2)
    xi = np.array([[0.5], [3.0], [100.0]])
    first = Derivative(m, [1])
    np.testing.assert_allclose(first(xi), 2.0 * xi[:, 0], rtol=1e-7)
    second = m.derivative([2])
    np.testing.assert_allclose(second(xi), np.full(3, 2.0), rtol=1e-5)
    assert second.order == 0.0
    with pytest.raises(ValueError):
        Derivative(m, [1, 0])


def test_combinations(line):
    a = SmoothedNormPower(line, 1)
    b = Constant(line, 3.0)
    xi = np.array([[0.0], [2.0]])
    assert (a * b).order == 1.0
    np.testing.assert_allclose((a * b)(xi), 3.0 * a(xi))
    np.testing.assert_allclose((a + b)(xi), a(xi) + 3.0)
    np.testing.assert_allclose((a - b)(xi), a(xi) - 3.0)
    np.testing.assert_allclose((-a)(xi), -a(xi))
    np.testing.assert_allclose((2.0 * a)(xi), 2.0 * a(xi))
    assert (a + b).order == 1.0
    assert LinearCombination([b])(xi).shape == (2, )
    with pytest.raises(ValueError):
        Product([])
    with pytest.raises(ValueError):
        LinearCombination([])
    with pytest.raises(ValueError):
        LinearCombination([a, b], [1.0])


def test_annulus_points(heisenberg):
    for k in (0, 3):
        points = annulus_points(heisenberg, k, num_points=256)
        norms = heisenberg.norm(points)
        assert len(points) > 200
        assert np.all(norms >= 2.0**k * (1 - 1e-12))
        assert np.all(norms < 2.0**(k + 1) * (1 + 1e-12))


def test_estimate_order(line, heisenberg):
    ks = range(4, 12)
    fit = estimate_order(SmoothedNormPower(line, 1), ks=ks)
    assert fit.slope == pytest.approx(1.0, abs=0.05)
    assert fit.ks == list(ks)
    fit = estimate_order(JapaneseBracket(line, -1), ks=ks)
    assert fit.slope == pytest.approx(-1.0, abs=0.05)
    fit = estimate_order(SmoothedNormPower(heisenberg, 2), ks=ks)
    assert fit.slope == pytest.approx(2.0, abs=0.05)

    fit = estimate_order(Constant(line).derivative([1]), ks=ks)
    assert fit.slope == -math.inf
    assert fit.to_dict()['sups'] == [0.0] * len(ks)

    with pytest.raises(ValueError):
        estimate_order(Constant(line), ks=[1, 2])
