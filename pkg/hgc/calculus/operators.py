# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass
from typing import Optional

import numpy as np

from hgc.grid import Grid, GridFunction, Interpolator, group_convolve
from hgc.utils import (GridError, ResourceGuardError, get_root_logger,
                       parallel_map)
from .symbols import PsiDOSymbol

MAX_MATRIX_ENTRIES = 1 << 26
ROW_CHUNK_ENTRIES = 1 << 22
POWER_ITERATIONS = 50
POWER_TOL = 1e-9


class _OperatorRows:
    """Rows ``M[y, z] = K_y(y z^{-1}) dV`` for a block of output points,
    picklable for ray."""

    def __init__(self, symbol: PsiDOSymbol, grid: Grid, order: int):
        self.symbol = symbol
        self.grid = grid
        self.order = order

    def __call__(self, indices: np.ndarray) -> np.ndarray:
        group = self.symbol.group
        points = self.grid.flat_points()
        z_inv = group.inverse(points)
        rows = np.empty((len(indices), len(points)), dtype=complex)
        shared = None
        if self.symbol.x_independent:
            shared = Interpolator(self.symbol.kernel(self.grid), self.order)
        for row, index in enumerate(indices):
            y = points[index]
            interp = shared or Interpolator(
                self.symbol.kernel(self.grid, y), self.order)
            args = group.multiply(np.broadcast_to(y, z_inv.shape), z_inv)
            rows[row] = interp(args)
        return rows * self.grid.cell_volume


def _row_blocks(grid: Grid):
    step = max(1, ROW_CHUNK_ENTRIES // grid.num_points)
    return [
        np.arange(start, min(start + step, grid.num_points))
        for start in range(0, grid.num_points, step)
    ]


def _check_grid(symbol: PsiDOSymbol, grid: Grid) -> None:
    if grid.dim != symbol.group.dim:
        raise GridError(f'{grid.dim}-dim grid for a {symbol.group.dim}-dim '
                        'symbol')


def apply_operator(symbol: PsiDOSymbol,
                   f: GridFunction,
                   order: int = 1) -> GridFunction:
    """``[A f](y) = (a_y^vee * f)(y)`` on the grid of ``f``.

    An ``x``-independent symbol is one group convolution with a cached
    kernel. Otherwise every output point freezes its own symbol, which
    costs one inverse transform and one full quadrature per point.

    Args:
        symbol (PsiDOSymbol): The symbol.
        f (GridFunction): Input on a power-of-two space grid.
        order (int): Interpolation order of the kernels.

    Raises:
        GridError: If the symbol is not finite at some ``(y, xi)`` or the
            grid is unsuitable.
    """
    grid = f.grid
    _check_grid(symbol, grid)
    if symbol.x_independent:
        return group_convolve(
            symbol.group, symbol.kernel(grid), f, interpolate='left',
            order=order)
    rows = _OperatorRows(symbol, grid, order)
    column = f.values.reshape(-1)
    blocks = parallel_map(rows, _row_blocks(grid))
    values = np.concatenate([block @ column for block in blocks])
    return GridFunction(grid, values.reshape(grid.shape))


@dataclass
class OperatorMatrix:
    """Dense discretization ``(M f)(y) = sum_z M[y, z] f(z)``; the
    quadrature weight is part of the entries."""
    grid: Grid
    matrix: np.ndarray
    name: str = 'operator'

    def __post_init__(self):
        n = self.grid.num_points
        if self.matrix.shape != (n, n):
            raise GridError(f'matrix of shape {self.matrix.shape} for a grid '
                            f'of {n} points')
        if not np.all(np.isfinite(self.matrix)):
            raise GridError(f'operator {self.name} has non-finite entries')

    def apply(self, f: GridFunction) -> GridFunction:
        if f.grid != self.grid:
            raise GridError('function and operator live on different grids')
        values = self.matrix @ f.values.reshape(-1)
        return GridFunction(self.grid, values.reshape(self.grid.shape))

    def __matmul__(self, other: 'OperatorMatrix') -> 'OperatorMatrix':
        return compose(self, other)


def _guard(grid: Grid, max_entries: int) -> None:
    entries = grid.num_points**2
    if entries > max_entries:
        raise ResourceGuardError(
            f'operator matrix would have {entries} entries, the limit is '
            f'{max_entries}')


def operator_matrix(symbol: PsiDOSymbol,
                    grid: Grid,
                    order: int = 1,
                    max_entries: int = MAX_MATRIX_ENTRIES) -> OperatorMatrix:
    """Assemble the dense matrix of the operator of ``symbol``.

    Raises:
        ResourceGuardError: If the matrix exceeds ``max_entries``.
    """
    _check_grid(symbol, grid)
    _guard(grid, max_entries)
    rows = _OperatorRows(symbol, grid, order)
    matrix = np.concatenate(parallel_map(rows, _row_blocks(grid)))
    get_root_logger().info(f'assembled {grid.num_points}x{grid.num_points} '
                           f'matrix of {symbol.name}')
    return OperatorMatrix(grid, matrix, symbol.name)


def adjoint(op: OperatorMatrix) -> OperatorMatrix:
    """``W^-1 M^H W`` for the quadrature weights ``W``; the weights are
    uniform so this is the conjugate transpose."""
    return OperatorMatrix(op.grid, op.matrix.conj().T, f'{op.name}^*')


def compose(first: OperatorMatrix, second: OperatorMatrix) -> OperatorMatrix:
    """``first`` after ``second``."""
    if first.grid != second.grid:
        raise GridError('composed operators live on different grids')
    return OperatorMatrix(first.grid, first.matrix @ second.matrix,
                          f'{first.name}.{second.name}')


def power_norm(matrix: np.ndarray,
               max_iter: int = POWER_ITERATIONS,
               tol: float = POWER_TOL,
               seed: int = 0) -> float:
    """Largest singular value by power iteration on ``D^H D``.

    Stops after ``max_iter`` steps or when the estimate changes by less
    than ``tol`` relative.
    """
    if not np.any(matrix):
        return 0.0
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(matrix.shape[1]) + 0j
    v /= np.linalg.norm(v)
    estimate = 0.0
    for _ in range(max_iter):
        w = matrix.conj().T @ (matrix @ v)
        size = np.linalg.norm(w)
        if size == 0.0:
            return 0.0
        v = w / size
        previous, estimate = estimate, float(np.sqrt(size))
        if abs(estimate - previous) <= tol * estimate:
            break
    return estimate


@dataclass
class LeadingTermReport:
    """Operator norms on the interior block ``|x_i| <= R_i / 2``.

    Attributes:
        difference_norm (float): ``||M_a M_b - M_{ab}||``.
        composition_norm (float): ``||M_a M_b||``.
        x_independent (bool): Whether both symbols ignore ``x``.
        abelian (bool): Whether the group is abelian.
    """
    difference_norm: float
    composition_norm: float
    x_independent: bool
    abelian: bool

    @property
    def relative(self) -> float:
        if self.composition_norm == 0.0:
            return 0.0 if self.difference_norm == 0.0 else np.inf
        return self.difference_norm / self.composition_norm

    def to_dict(self) -> dict:
        return dict(
            difference_norm=self.difference_norm,
            composition_norm=self.composition_norm,
            relative=self.relative,
            x_independent=self.x_independent,
            abelian=self.abelian)


def interior_mask(grid: Grid) -> np.ndarray:
    points = grid.flat_points()
    half = np.array(grid.extents) / 2.0
    return np.all(np.abs(points) <= half, axis=-1)


def leading_term_check(a: PsiDOSymbol,
                       b: PsiDOSymbol,
                       grid: Grid,
                       order: int = 1,
                       max_entries: int = MAX_MATRIX_ENTRIES
                       ) -> LeadingTermReport:
    """Compare the composition of two operators with the operator of the
    frozen product symbol.

    Only the leading term of the composition expansion is compared. In the
    abelian ``x``-independent case the two agree exactly up to the
    truncation of the box, which the interior block stays away from.

    Raises:
        ValueError: If ``b`` depends on ``x`` without a compact support.
    """
    if not b.x_independent and b.support is None:
        raise ValueError('the right factor needs a compact x-support')
    m_a = operator_matrix(a, grid, order, max_entries)
    m_b = operator_matrix(b, grid, order, max_entries)
    m_ab = operator_matrix(a.product(b), grid, order, max_entries)
    inner = interior_mask(grid)
    composed = (m_a.matrix @ m_b.matrix)[np.ix_(inner, inner)]
    difference = composed - m_ab.matrix[np.ix_(inner, inner)]
    return LeadingTermReport(
        difference_norm=power_norm(difference),
        composition_norm=power_norm(composed),
        x_independent=a.x_independent and b.x_independent,
        abelian=a.group.is_abelian)


def max_entry_error(op: OperatorMatrix, other: Optional[OperatorMatrix] = None
                    ) -> float:
    """``max |M - other|``, ``other`` defaulting to the identity."""
    target = np.eye(op.grid.num_points) if other is None else other.matrix
    return float(np.max(np.abs(op.matrix - target)))
