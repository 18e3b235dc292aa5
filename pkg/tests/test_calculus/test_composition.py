from itertools import count
from unittest.mock import patch

import numpy as np
import pytest

from hgc.calculus import (CompositionResult, compose_report, convolve_kernels,
                          decay_ratio, rescale_piece)
from hgc.experiments.scenarios.compose_kernels import product_oracle_error
from hgc.grid import Grid, GridFunction, group_convolve, sample
from hgc.groups import build_group
from hgc.multipliers import (Constant, JapaneseBracket, SmoothedNormPower,
                             decompose)
from hgc.utils import DecayCertificateError, DivisionError

GRID = Grid.regular(1, 4.0, 32)


@pytest.fixture
def line():
    return build_group('euclidean:1')


def geometric(base):
    steps = count()

    def seminorm(group, f, level=1):
        return base**next(steps)

    return seminorm


def test_decay_ratio():
    assert decay_ratio([8.0, 4.0, 2.0, 1.0]) == pytest.approx(0.5)
    assert decay_ratio([1.0]) == 0.0
    assert decay_ratio([]) == 0.0
    assert decay_ratio([1.0, 1e-12]) == 0.0
    assert decay_ratio([1.0, 2.0, 4.0]) == pytest.approx(2.0)


def test_rescale_piece_errors(line):
    gaussian = sample(lambda x: np.exp(-np.pi * x[..., 0]**2), GRID)
    with pytest.raises(ValueError):
        rescale_piece(line, gaussian, gaussian, 0, 1, 0.0)
    with pytest.raises(DivisionError):
        rescale_piece(line, gaussian, gaussian, 1, 0, 0.0)


def test_convolve_kernels(line):
    dd1 = decompose(Constant(line), 2, GRID)
    dd2 = decompose(Constant(line, 2.0), 2, GRID)
    with patch('hgc.calculus.composition._seminorm', geometric(0.5)):
        result = convolve_kernels(dd1, dd2)
    assert result.K == 2
    assert result.L == 1
    assert result.ratio_bound == 0.5
    assert len(result.kernel_pieces) == 3
    assert len(result.decomposition) == 3
    assert result.decomposition.order == 0.0
    assert [len(result.addend_norms['tau'][k]) for k in range(3)] == [3, 2, 1]
    assert [len(result.addend_norms['eta'][k]) for k in range(3)] == [2, 1, 0]
    assert result.decay_ratios['tau:0'] == pytest.approx(0.5)
    assert result.decay_ratios['eta:2'] == 0.0
    assert result.max_ratio == pytest.approx(0.5)

    summary = compose_report(result, fitted_order=0.0, level=1)
    assert summary['L'] == 1
    assert len(summary['piece_seminorms']) == 3
    assert summary['addend_norms']['tau']['0'] == result.addend_norms['tau'][0]

    with patch('hgc.calculus.composition._seminorm', geometric(2.0)):
        with pytest.raises(DecayCertificateError):
            convolve_kernels(dd1, dd2)


def test_convolve_kernels_errors(line):
    dd = decompose(Constant(line), 2, GRID)
    with pytest.raises(ValueError):
        convolve_kernels(dd, decompose(Constant(line), 2,
                                       Grid.regular(1, 8.0, 32)))
    with pytest.raises(ValueError):
        convolve_kernels(dd, dd, L=0)
    with pytest.raises(ValueError):
        convolve_kernels(dd, dd, K=3)
    with pytest.raises(ValueError):
        convolve_kernels(dd, decompose(SmoothedNormPower(line, 2), 2, GRID),
                         L=2)


def test_composed_pieces_are_grid_functions(line):
    dd = decompose(Constant(line), 1, GRID)
    with patch('hgc.calculus.composition._seminorm', geometric(0.5)):
        result = convolve_kernels(dd, dd)
    for piece in result.kernel_pieces:
        assert isinstance(piece, GridFunction)
        assert piece.grid == GRID


def test_default_certificate_level(line):
    dd0 = decompose(Constant(line), 1, GRID)
    dd_half = decompose(JapaneseBracket(line, 0.5), 1, GRID)
    dd1 = decompose(JapaneseBracket(line, 1), 1, GRID)
    with patch('hgc.calculus.composition._seminorm', geometric(0.5)):
        assert convolve_kernels(dd0, dd0).L == 1
        assert convolve_kernels(dd_half, dd0).L == 1
        result = convolve_kernels(dd1, dd_half)
    assert result.L == 2
    assert result.ratio_bound == pytest.approx(0.5)
    assert result.decomposition.order == pytest.approx(1.5)


def test_certify(line):
    dd = decompose(Constant(line), 2, GRID)
    # 0.8 decays but exceeds 1.5 * 2^-1
    with patch('hgc.calculus.composition._seminorm', geometric(0.8)):
        with pytest.raises(DecayCertificateError, match='decay slower'):
            convolve_kernels(dd, dd)
    with patch('hgc.calculus.composition._seminorm', geometric(0.8)):
        result = convolve_kernels(dd, dd, ratio_slack=None)
    assert result.max_ratio == pytest.approx(0.8)
    result.certify(slack=2.0)
    with pytest.raises(DecayCertificateError):
        result.certify()

    result = CompositionResult(
        decomposition=None,
        kernel_pieces=[],
        j1=0.5,
        j2=0.0,
        K=0,
        L=3,
        addend_norms={},
        decay_ratios={
            'tau:0': 0.1,
            'eta:0': 0.3
        })
    assert result.ratio_bound == pytest.approx(2.0**-2.5)
    with pytest.raises(DecayCertificateError, match='eta:0'):
        result.certify()
    result.certify(slack=2.0)


def test_rescale_piece_same_scale(line):
    phi = sample(lambda x: np.exp(-np.pi * x[..., 0]**2), GRID)
    psi = sample(lambda x: np.exp(-2 * np.pi * x[..., 0]**2), GRID)
    piece = rescale_piece(line, phi, psi, 0, 0, 0.5)
    assert (piece.k, piece.l) == (0, 0)
    plain = group_convolve(line, phi, psi, interpolate='right', order=3)
    np.testing.assert_allclose(piece.eta.values, plain.values, atol=1e-12)
    # the line is abelian
    np.testing.assert_allclose(
        piece.eta_prime.values, piece.eta.values, atol=1e-12)
    z = GRID.points()[..., 0]
    exact = np.exp(-2 * np.pi * z**2 / 3) / np.sqrt(3)
    np.testing.assert_allclose(piece.eta.values.real, exact, atol=1e-6)
    assert set(piece.certificate) == {0, 1, 2}


def test_product_oracle_on_the_line(line):
    grid = Grid.regular(1, 16.0, 1024)
    m1 = JapaneseBracket(line, 0.5)
    m2 = JapaneseBracket(line, 0.5)
    result = convolve_kernels(
        decompose(m1, 6, grid), decompose(m2, 6, grid), K=6)
    assert result.decomposition.order == pytest.approx(1.0)
    assert result.max_ratio <= 1.5 * result.ratio_bound
    assert product_oracle_error(result, m1, m2, 6) < 1e-3


def test_constant_is_the_identity(line):
    grid = Grid.regular(1, 16.0, 1024)
    m = JapaneseBracket(line, 0.5)
    identity = Constant(line)
    result = convolve_kernels(
        decompose(m, 5, grid), decompose(identity, 5, grid), K=5)
    assert result.decomposition.order == pytest.approx(0.5)
    assert product_oracle_error(result, m, identity, 5) < 1e-3
