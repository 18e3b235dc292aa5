import numpy as np
import pytest

from hgc.grid import (Grid, boundary_mass, is_moment_free, moments,
                      origin_derivatives, sample, schwartz_seminorms,
                      vanishes_at_origin)
from hgc.groups import build_group
from hgc.multipliers import build_lp_system


def gaussian(x):
    return np.exp(-np.pi * np.sum(x**2, axis=-1))


def second_derivative(x):
    r2 = np.sum(x**2, axis=-1)
    return (4.0 * np.pi**2 * r2 - 2.0 * np.pi) * gaussian(x)


def test_moments():
    grid = Grid.regular(1, 8.0, 128)
    f = sample(gaussian, grid)
    table = moments(f, 2)
    assert table[(0, )] == pytest.approx(1.0, abs=1e-12)
    assert abs(table[(1, )]) < 1e-12
    assert table[(2, )] == pytest.approx(1.0 / (2.0 * np.pi), abs=1e-12)
    assert boundary_mass(f) < 1e-30


def test_is_moment_free():
    f = sample(second_derivative, Grid.regular(1, 8.0, 128))
    assert is_moment_free(f, 1)
    # int x^2 g'' = 2 int g = 2
    assert not is_moment_free(f, 2)
    assert not is_moment_free(sample(gaussian, f.grid), 0)


def test_vanishes_at_origin():
    group = build_group('euclidean:1')
    lp = build_lp_system(group)
    grid = Grid.regular(1, 4.0, 256)
    psi = sample(lp.phi, grid)
    assert vanishes_at_origin(psi)
    assert max(origin_derivatives(psi).values()) == 0.0
    assert not vanishes_at_origin(sample(gaussian, grid))


def test_schwartz_seminorms():
    group = build_group('euclidean:1')
    f = sample(gaussian, Grid.regular(1, 8.0, 256))
    report = schwartz_seminorms(f, group, max_decay=2, max_order=2)
    assert len(report.table) == 3 * 3
    assert report.value(0, (0, )) == 1.0
    assert report.value(2, (0, )) > report.value(0, (0, ))
    # sup |g'| = sqrt(2 pi / e)
    assert report.value(0, (1, )) == pytest.approx(
        np.sqrt(2.0 * np.pi / np.e), rel=1e-2)
    assert report.max() == max(report.table.values())
    assert 'I=0,alpha=(0)' in report.to_dict()
