# Copyright (c) SI-Analytics. All rights reserved.
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from hgc.utils import GridError, as_tuple

Number = Union[int, float, complex]


@dataclass(frozen=True)
class Grid:
    """Uniform box grid ``x_m = -R + m h`` with ``h = 2R / N`` per axis.

    ``N`` is even, so ``m = N / 2`` samples the origin.

    Args:
        extents (tuple[float]): Half-widths ``R_i``.
        sizes (tuple[int]): Points per axis ``N_i``.
    """
    extents: Tuple[float, ...]
    sizes: Tuple[int, ...]

    def __post_init__(self):
        if len(self.extents) != len(self.sizes) or not self.sizes:
            raise GridError('extents and sizes must have the same length')
        for r, n in zip(self.extents, self.sizes):
            if r <= 0:
                raise GridError(f'extent must be positive, got {r}')
            if n < 8 or n % 2:
                raise GridError(f'axis size must be even and >= 8, got {n}')

    @classmethod
    def regular(cls, dim: int, extent, size) -> 'Grid':
        """Grid with scalar or per-axis extent and size."""
        return cls(
            tuple(float(r) for r in as_tuple(extent, dim, 'extent')),
            tuple(int(n) for n in as_tuple(size, dim, 'size')))

    @classmethod
    def from_cfg(cls, cfg: dict, dim: int) -> 'Grid':
        return cls.regular(dim, cfg['extent'], cfg['size'])

    @property
    def dim(self) -> int:
        return len(self.sizes)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.sizes)

    @property
    def steps(self) -> Tuple[float, ...]:
        return tuple(2.0 * r / n for r, n in zip(self.extents, self.sizes))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.steps))

    @property
    def volume(self) -> float:
        return float(np.prod([2.0 * r for r in self.extents]))

    @property
    def num_points(self) -> int:
        return int(np.prod(self.sizes))

    @property
    def origin_index(self) -> Tuple[int, ...]:
        return tuple(n // 2 for n in self.sizes)

    def axes(self) -> Tuple[np.ndarray, ...]:
        return tuple(-r + h * np.arange(n)
                     for r, h, n in zip(self.extents, self.steps, self.sizes))

    @cached_property
    def _points(self) -> np.ndarray:
        mesh = np.meshgrid(*self.axes(), indexing='ij')
        points = np.stack(mesh, axis=-1)
        points.setflags(write=False)
        return points

    def points(self) -> np.ndarray:
        """Sample points with shape ``sizes + (dim, )``, read-only."""
        return self._points

    def flat_points(self) -> np.ndarray:
        return self._points.reshape(-1, self.dim)

    def frequency_grid(self) -> 'Grid':
        """The grid on which :func:`dft` samples the transform.

        Step ``1 / (2R)`` and extent ``N / (4R)``; the frequency grid of
        the frequency grid is this grid again.
        """
        return Grid(
            tuple(n / (4.0 * r) for r, n in zip(self.extents, self.sizes)),
            self.sizes)

    def band_mask(self, band: Sequence[int]) -> np.ndarray:
        """Boolean mask of samples at least ``band[i]`` cells from the
        edges of every axis."""
        mask = np.ones(self.shape, dtype=bool)
        for axis, (b, n) in enumerate(zip(band, self.sizes)):
            if b <= 0:
                continue
            index = [slice(None)] * self.dim
            if 2 * b >= n:
                return np.zeros(self.shape, dtype=bool)
            index[axis] = slice(0, b)
            mask[tuple(index)] = False
            index[axis] = slice(n - b, n)
            mask[tuple(index)] = False
        return mask

    def to_dict(self) -> dict:
        return dict(extent=list(self.extents), size=list(self.sizes))


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Complex samples of a scalar field on a :class:`Grid`.

    Args:
        grid (Grid): The sampling grid.
        values (np.ndarray): Samples with shape ``grid.shape``; stored as a
            read-only complex array.
        band (tuple[int]): Cells per axis at each edge where the samples
            are not trusted (finite-difference stencils ran off the box).
    """
    grid: Grid
    values: np.ndarray
    band: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.shape != self.grid.shape:
            raise GridError(f'values have shape {values.shape}, grid '
                            f'expects {self.grid.shape}')
        if not np.all(np.isfinite(values)):
            bad = tuple(int(i) for i in np.argwhere(~np.isfinite(values))[0])
            raise GridError(f'non-finite sample at index {bad}')
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        band = tuple(self.band) or (0, ) * self.grid.dim
        object.__setattr__(self, 'band', band)

    @property
    def real(self) -> np.ndarray:
        return self.values.real

    def valid_mask(self) -> np.ndarray:
        return self.grid.band_mask(self.band)

    def with_values(self, values, band=None) -> 'GridFunction':
        return GridFunction(self.grid, values,
                            self.band if band is None else band)

    def _check(self, other: 'GridFunction') -> None:
        if other.grid != self.grid:
            raise GridError('grid functions live on different grids')

    def _combine(self, other, op: Callable) -> 'GridFunction':
        if isinstance(other, GridFunction):
            self._check(other)
            band = tuple(max(a, b) for a, b in zip(self.band, other.band))
            return GridFunction(self.grid, op(self.values, other.values),
                                band)
        return GridFunction(self.grid, op(self.values, other), self.band)

    def __add__(self, other) -> 'GridFunction':
        return self._combine(other, np.add)

    __radd__ = __add__

    def __sub__(self, other) -> 'GridFunction':
        return self._combine(other, np.subtract)

    def __mul__(self, other) -> 'GridFunction':
        return self._combine(other, np.multiply)

    __rmul__ = __mul__

    def __neg__(self) -> 'GridFunction':
        return GridFunction(self.grid, -self.values, self.band)

    def sup(self, weight: np.ndarray = None) -> float:
        """Max of ``|weight * f|`` over the valid region."""
        values = np.abs(self.values)
        if weight is not None:
            values = values * weight
        mask = self.valid_mask()
        return float(values[mask].max()) if mask.any() else 0.0

    def integral(self) -> complex:
        return complex(self.values.sum() * self.grid.cell_volume)

    def value_at_origin(self) -> complex:
        return complex(self.values[self.grid.origin_index])


def sample(field: Callable[[np.ndarray], np.ndarray],
           grid: Grid) -> GridFunction:
    """Evaluate ``field`` at every grid point.

    Args:
        field (Callable): Vectorized callable taking points of shape
            ``(..., dim)``.
        grid (Grid): The grid.

    Returns:
        GridFunction: The samples.

    Raises:
        GridError: If an evaluation is not finite; the message names the
            first offending point.
    """
    points = grid.points()
    values = np.broadcast_to(np.asarray(field(points), dtype=complex),
                             grid.shape)
    bad = ~np.isfinite(values)
    if bad.any():
        index = tuple(int(i) for i in np.argwhere(bad)[0])
        raise GridError(f'non-finite value {values[index]} at point '
                        f'{points[index].tolist()} (index {index})')
    return GridFunction(grid, values)
