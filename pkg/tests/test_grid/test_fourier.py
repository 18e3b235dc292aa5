import numpy as np
import pytest

from hgc.grid import (Grid, MAX_DERIVATIVE_ORDER, dft, frequencies, idft,
                      partial_derivative, sample, spectral_derivative)
from hgc.groups import Multiindex, build_group, build_vector_fields
from hgc.utils import GridError


def gaussian(x):
    return np.exp(-np.pi * np.sum(x**2, axis=-1))


def test_dft_gaussian():
    grid = Grid.regular(1, 8.0, 128)
    transform = dft(sample(gaussian, grid))
    assert transform.grid == grid.frequency_grid()
    np.testing.assert_allclose(
        transform.values, gaussian(frequencies(grid)), atol=1e-12)

    grid = Grid.regular(2, 4.0, 32)
    f = sample(lambda x: gaussian(x) * (1.0 + x[..., 0]), grid)
    back = idft(dft(f))
    assert back.grid == grid
    np.testing.assert_allclose(back.values, f.values, atol=1e-13)


def test_dft_needs_power_of_two():
    with pytest.raises(GridError):
        dft(sample(gaussian, Grid.regular(1, 4.0, 24)))


def test_finite_difference():
    grid = Grid.regular(1, 4.0, 256)
    f = sample(gaussian, grid)
    x = grid.points()[..., 0]
    deriv = partial_derivative(f, (1, ))
    assert deriv.band == (2, )
    exact = -2.0 * np.pi * x * gaussian(grid.points())
    assert (deriv - exact).sup() < 1e-4

    second = partial_derivative(f, Multiindex((2, )))
    assert second.band == (2, )
    exact = (4.0 * np.pi**2 * x**2 - 2.0 * np.pi) * gaussian(grid.points())
    assert (second - exact).sup() < 1e-3
    assert partial_derivative(f, (0, )) is f


def test_derivative_errors():
    f = sample(gaussian, Grid.regular(2, 4.0, 32))
    with pytest.raises(GridError):
        partial_derivative(f, (MAX_DERIVATIVE_ORDER, 1))
    with pytest.raises(GridError):
        partial_derivative(f, (1, ))
    with pytest.raises(GridError):
        partial_derivative(f, (1, 0), method='chebyshev')


def test_spectral_derivative():
    grid = Grid.regular(1, 8.0, 128)
    f = sample(gaussian, grid)
    x = grid.points()[..., 0]
    exact = -2.0 * np.pi * x * gaussian(grid.points())
    np.testing.assert_allclose(
        spectral_derivative(f, 0).values, exact, atol=1e-10)
    np.testing.assert_allclose(
        partial_derivative(f, (1, ), method='spectral').values,
        exact,
        atol=1e-10)


def test_vector_field_on_grid():
    group = build_group('heisenberg:1')
    table = build_vector_fields(group)
    grid = Grid.regular(3, 1.0, 8)
    points = grid.points()
    x, y, t = points[..., 0], points[..., 1], points[..., 2]
    f = sample(lambda p: p[..., 0] * p[..., 2], grid)
    # X_1 (x t) = t - x y / 2, exact for quadratic polynomials
    out = table.apply(f, 0)
    assert out.band == (2, 0, 2)
    assert (out - (t - 0.5 * x * y)).sup() < 1e-12
    out = table.apply(f, 2)
    assert (out - x).sup() < 1e-12
