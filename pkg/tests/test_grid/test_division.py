import numpy as np
import pytest

from hgc.grid import (Grid, coordinate_division, field_residual, sample,
                      vector_field_division)
from hgc.groups import build_group, build_vector_fields
from hgc.multipliers import build_lp_system
from hgc.utils import DivisionError


def gaussian(x):
    return np.exp(-np.pi * np.sum(x**2, axis=-1))


def third_derivative(x):
    # d^3/dx_0^3 of the Gaussian; every moment of degree <= 2 vanishes
    x0 = x[..., 0]
    return (12.0 * np.pi**2 * x0 - 8.0 * np.pi**3 * x0**3) * gaussian(x)


def test_coordinate_division():
    group = build_group('euclidean:2')
    lp = build_lp_system(group)
    grid = Grid.regular(2, 4.0, 128)
    psi = sample(lp.phi, grid)
    pieces = coordinate_division(psi)
    assert len(pieces) == 2
    xi = grid.points()
    total = sum(xi[..., j] * p.values for j, p in enumerate(pieces))
    assert np.max(np.abs(total - psi.values)) < 1e-12
    assert all(np.all(np.isfinite(p.values)) for p in pieces)

    with pytest.raises(DivisionError):
        coordinate_division(sample(gaussian, grid))


def test_vector_field_division():
    group = build_group('euclidean:2')
    table = build_vector_fields(group)
    f = sample(third_derivative, Grid.regular(2, 4.0, 64))
    parts = vector_field_division(f, table)
    assert len(parts) == 2
    assert field_residual(f, parts, table) < 1e-8 * f.sup()

    with pytest.raises(DivisionError):
        vector_field_division(sample(gaussian, f.grid), table)
