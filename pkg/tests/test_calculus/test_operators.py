import numpy as np
import pytest

from hgc.calculus import (OperatorMatrix, PsiDOSymbol, adjoint,
                          apply_operator, compose, interior_mask,
                          leading_term_check, max_entry_error,
                          operator_matrix, power_norm)
from hgc.grid import Grid, Interpolator, sample
from hgc.groups import build_group
from hgc.multipliers import Constant, JapaneseBracket, Multiplier
from hgc.utils import GridError, ResourceGuardError

GRID = Grid.regular(1, 4.0, 16)


@pytest.fixture
def line():
    return build_group('euclidean:1')


def weighted(line):
    # multiplication by 1 + x^2
    return PsiDOSymbol(
        line,
        lambda x, xi: 1.0 + x[..., 0]**2 + 0.0 * xi[..., 0],
        support=[4.0],
        name='weight')


def gaussian(x):
    return np.exp(-np.pi * x[..., 0]**2)


def test_symbol(line):
    symbol = PsiDOSymbol.from_multiplier(JapaneseBracket(line, 2))
    assert symbol.x_independent
    assert symbol.order == 2.0
    xi = np.array([[0.0], [1.0], [2.0]])
    np.testing.assert_allclose(symbol(np.zeros(1), xi), [1.0, 2.0, 5.0])
    frozen = symbol.frozen([3.0])
    assert frozen.order == 2.0
    np.testing.assert_allclose(frozen(xi), [1.0, 2.0, 5.0])
    assert symbol.kernel(GRID) is symbol.kernel(GRID)
    assert 'JapaneseBracket' in repr(symbol)

    w = weighted(line)
    assert not w.x_independent
    np.testing.assert_allclose(w([[2.0]], [[5.0]]), [5.0])
    product = symbol.product(w)
    assert product.order == 2.0
    assert not product.x_independent
    assert product.support == (4.0, )
    np.testing.assert_allclose(product([[1.0]], [[1.0]]), [4.0])


def test_symbol_check(line):
    constant = PsiDOSymbol.from_multiplier(Constant(line, 2.0))
    assert constant.check(GRID.frequency_grid()) == {'[0.0]': 2.0}
    table = weighted(line).check(GRID.frequency_grid(), N=0)
    assert table == {'[0.0]': 1.0, '[4.0]': 17.0, '[-4.0]': 17.0}


def test_identity_operator(line):
    identity = PsiDOSymbol.from_multiplier(Constant(line))
    op = operator_matrix(identity, GRID)
    assert op.matrix.shape == (16, 16)
    assert max_entry_error(op) < 1e-10
    f = sample(gaussian, GRID)
    np.testing.assert_allclose(op.apply(f).values, f.values, atol=1e-10)
    np.testing.assert_allclose(
        apply_operator(identity, f).values, f.values, atol=1e-10)

    with pytest.raises(ResourceGuardError):
        operator_matrix(identity, GRID, max_entries=100)
    with pytest.raises(GridError):
        operator_matrix(identity, Grid.regular(2, 1.0, 8))


def test_multiplication_operator(line):
    symbol = weighted(line)
    f = sample(gaussian, GRID)
    x = GRID.points()[..., 0]
    np.testing.assert_allclose(
        apply_operator(symbol, f).values, (1.0 + x**2) * f.values,
        atol=1e-10)
    op = operator_matrix(symbol, GRID)
    np.testing.assert_allclose(np.diag(op.matrix).real, 1.0 + x**2,
                               atol=1e-10)

    star = adjoint(op)
    np.testing.assert_array_equal(adjoint(star).matrix, op.matrix)
    assert star.name == 'weight^*'
    squared = op @ op
    np.testing.assert_allclose(
        np.diag(squared.matrix).real, (1.0 + x**2)**2, atol=1e-8)
    assert compose(op, star).matrix.shape == (16, 16)
    with pytest.raises(GridError):
        compose(op, OperatorMatrix(Grid.regular(1, 2.0, 16), op.matrix))


def test_operator_matrix_validation():
    with pytest.raises(GridError):
        OperatorMatrix(GRID, np.eye(8))
    with pytest.raises(GridError):
        OperatorMatrix(GRID, np.full((16, 16), np.nan))


def test_power_norm():
    assert power_norm(np.diag([3.0, 1.0, 2.0])) == pytest.approx(
        3.0, rel=1e-6)
    assert power_norm(np.zeros((4, 4))) == 0.0
    rng = np.random.default_rng(3)
    matrix = rng.normal(size=(20, 20))
    assert power_norm(matrix, max_iter=5000, tol=1e-14) == pytest.approx(
        np.linalg.norm(matrix, 2), rel=1e-6)


def test_leading_term_check(line):
    assert interior_mask(GRID).sum() == 9
    a = PsiDOSymbol.from_multiplier(Constant(line, 2.0))
    b = PsiDOSymbol.from_multiplier(Constant(line, 3.0))
    report = leading_term_check(a, b, GRID)
    assert report.x_independent
    assert report.abelian
    assert report.composition_norm == pytest.approx(6.0, rel=1e-8)
    assert report.relative < 1e-10
    assert set(report.to_dict()) == {
        'difference_norm', 'composition_norm', 'relative', 'x_independent',
        'abelian'
    }

    unsupported = PsiDOSymbol(line, lambda x, xi: x[..., 0] + xi[..., 0])
    with pytest.raises(ValueError):
        leading_term_check(a, unsupported, GRID)


def gaussian_symbol(group, width=1.0):
    """``exp(-pi width |xi|^2)``, the transform of a Gaussian kernel."""
    m = Multiplier(
        group,
        0.0,
        lambda xi: np.exp(-np.pi * width * np.sum(xi**2, axis=-1)),
        name=f'gauss({width:g})')
    return PsiDOSymbol.from_multiplier(m)


def test_x_independent_operator_is_a_convolution(line):
    grid = Grid.regular(1, 8.0, 128)
    symbol = gaussian_symbol(line)
    f = sample(gaussian, grid)
    # exp(-pi x^2) * exp(-pi x^2) = exp(-pi x^2 / 2) / sqrt(2)
    x = grid.points()[..., 0]
    exact = np.exp(-np.pi * x**2 / 2) / np.sqrt(2)
    af = apply_operator(symbol, f)
    np.testing.assert_allclose(af.values, exact, atol=1e-8)
    op = operator_matrix(symbol, grid)
    np.testing.assert_allclose(op.apply(f).values, af.values, atol=1e-10)
    # columns are translates of one kernel
    np.testing.assert_allclose(op.matrix[1:, 1:], op.matrix[:-1, :-1],
                               atol=1e-12)


def test_leading_term_of_multipliers(line):
    grid = Grid.regular(1, 8.0, 64)
    a = gaussian_symbol(line, 1.0)
    b = gaussian_symbol(line, 2.0)
    report = leading_term_check(a, b, grid)
    assert report.x_independent
    assert report.abelian
    assert 0.5 < report.composition_norm <= 1.0 + 1e-6
    assert report.relative < 1e-5


def test_operator_commutes_with_translation():
    group = build_group('heisenberg:1')
    grid = Grid((3.0, 3.0, 4.0), (16, 16, 32))
    symbol = gaussian_symbol(group)

    def f(x):
        return np.exp(-np.pi * np.sum(x**2, axis=-1) / 2)

    af = apply_operator(symbol, sample(f, grid))
    peak = np.abs(af.values).max()

    # a central element shifts the grid by four steps
    g = np.array([0.0, 0.0, 4 * grid.steps[2]])
    moved = apply_operator(
        symbol, sample(lambda x: f(group.multiply(x, g)), grid))
    np.testing.assert_allclose(
        moved.values[..., :-4], af.values[..., 4:], atol=1e-5 * peak)

    # off the center x g leaves the grid; compare on the interior block
    g = np.array([grid.steps[0], 0.0, 0.0])
    moved = apply_operator(
        symbol, sample(lambda x: f(group.multiply(x, g)), grid))
    inner = interior_mask(grid).reshape(grid.shape)
    expected = Interpolator(af, order=3)(group.multiply(grid.points(), g))
    np.testing.assert_allclose(
        moved.values[inner], expected[inner], atol=2e-2 * peak)
