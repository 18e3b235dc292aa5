import math

import pytest

from hgc.calculus import (BumpProfile, balanced_split, frazier_jawerth_ratio,
                          frazier_jawerth_sweep, origin_ratio_exact)
from hgc.grid import Grid
from hgc.groups import build_group


@pytest.fixture
def line():
    return build_group('euclidean:1')


def test_bump_profile(line):
    bump = BumpProfile(line, 1.0, 3.0)
    assert bump([[0.0]])[0] == 1.0
    assert bump([[0.5]])[0] == pytest.approx(2.0**-3)
    # 2 int_0^inf (1 + r)^{-J-1} dr = 2 / J on the line
    assert BumpProfile(line, 0.0, 3.0).mass() == pytest.approx(1.0, rel=1e-8)
    assert bump.mass() == pytest.approx(0.5, rel=1e-8)
    assert BumpProfile(line, 0.0, 1.0).mass() == math.inf
    with pytest.raises(ValueError):
        BumpProfile(line, 0.0, 0.0)


def test_balanced_split():
    assert [balanced_split(d) for d in range(4)] == [(0, 0), (1, 0), (1, -1),
                                                     (2, -1)]
    for d in range(10):
        sigma, nu = balanced_split(d)
        assert sigma - nu == d


def test_frazier_jawerth_ratio(line):
    grid = Grid.regular(1, 16.0, 256)
    result = frazier_jawerth_ratio(line, 0, 0, 2.0, grid)
    assert result.I == 3.0
    # int (1 + |u|)^{-5} du = 1 / 2 at the origin
    assert result.origin_ratio == pytest.approx(0.5, rel=0.05)
    assert result.sup_ratio >= result.origin_ratio
    assert result.argmax_norm == pytest.approx(abs(result.argmax[0]))

    with pytest.raises(ValueError):
        frazier_jawerth_ratio(line, 0, 1, 2.0, grid)
    with pytest.raises(ValueError):
        frazier_jawerth_ratio(line, 1, 0, 0.0, grid)


def test_frazier_jawerth_sweep(line):
    grid = Grid.regular(1, 16.0, 256)
    report = frazier_jawerth_sweep(line, 2.0, grid, d_range=range(3))
    assert len(report.results) == 3
    assert [row[:2] for row in report.rows()] == [[0, 0], [1, 0], [1, -1]]
    low, high = report.band
    assert 0.0 < low <= high
    assert report.band_ratio >= 1.0
    assert report.bump_mass == pytest.approx(1.0, rel=1e-8)
    assert report.to_dict()['band'] == [low, high]
    assert report.origin_exact == pytest.approx(0.5, rel=1e-8)
    assert report.result_at(1.0, -1.0) is report.results[2]
    assert report.result_at(2.0, 0.0) is None


def test_origin_ratio_exact(line):
    assert origin_ratio_exact(line, 2.0) == pytest.approx(0.5, rel=1e-8)
    assert origin_ratio_exact(line, 3.0) == pytest.approx(1 / 3, rel=1e-8)
    # a fine grid reproduces the closed form up to the kink at the origin
    grid = Grid.regular(1, 32.0, 2048)
    result = frazier_jawerth_ratio(line, 0, 0, 2.0, grid)
    assert abs(result.origin_ratio - 0.5) < 2e-3
