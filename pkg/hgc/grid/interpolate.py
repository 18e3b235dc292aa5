# Copyright (c) SI-Analytics. All rights reserved.
import numpy as np
from scipy import ndimage

from hgc.groups import HomogeneousGroup
from hgc.utils import GridError
from .grid import Grid, GridFunction

SNAP_TOL = 1e-9


def fractional_index(grid: Grid, points: np.ndarray) -> np.ndarray:
    """Grid coordinates ``(x + R) / h`` of ``points``; shape ``(dim, ...)``.

    Coordinates within :data:`SNAP_TOL` cells of an integer are snapped.
    """
    points = np.asarray(points, dtype=float)
    if points.shape[-1] != grid.dim:
        raise GridError(f'points of dimension {points.shape[-1]} on a '
                        f'{grid.dim}-dim grid')
    index = np.empty((grid.dim, ) + points.shape[:-1])
    for axis, (r, h) in enumerate(zip(grid.extents, grid.steps)):
        coord = (points[..., axis] + r) / h
        nearest = np.rint(coord)
        index[axis] = np.where(
            np.abs(coord - nearest) < SNAP_TOL, nearest, coord)
    return index


class Interpolator:
    """Off-grid evaluation of a :class:`GridFunction`, zero outside the box.

    Args:
        f (GridFunction): The samples.
        order (int): 1 for multilinear, 3 for cubic spline interpolation.
    """

    def __init__(self, f: GridFunction, order: int = 1):
        if order not in (1, 3):
            raise GridError(f'interpolation order must be 1 or 3, got {order}')
        self.grid = f.grid
        self.order = order
        parts = [f.values.real]
        self.is_real = not np.any(f.values.imag)
        if not self.is_real:
            parts.append(f.values.imag)
        if order == 3:
            parts = [
                ndimage.spline_filter(p, order=3, mode='mirror')
                for p in parts
            ]
        self._coeffs = parts

    def inside(self, index: np.ndarray) -> np.ndarray:
        upper = np.array(self.grid.sizes, dtype=float) - 1.0
        upper = upper.reshape((-1, ) + (1, ) * (index.ndim - 1))
        return np.all((index >= 0.0) & (index <= upper), axis=0)

    def __call__(self, points: np.ndarray) -> np.ndarray:
        index = fractional_index(self.grid, points)
        inside = self.inside(index)
        flat = index.reshape(self.grid.dim, -1)
        out = [
            ndimage.map_coordinates(
                c, flat, order=self.order, mode='mirror', prefilter=False)
            for c in self._coeffs
        ]
        values = out[0] if self.is_real else out[0] + 1j * out[1]
        values = values.reshape(index.shape[1:])
        return np.where(inside, values, 0.0)


def interpolate(f: GridFunction, points: np.ndarray,
                order: int = 1) -> np.ndarray:
    """Evaluate ``f`` at arbitrary points; see :class:`Interpolator`."""
    return Interpolator(f, order)(points)


def resample(f: GridFunction, grid: Grid, order: int = 1) -> GridFunction:
    """Interpolate ``f`` onto another grid."""
    return GridFunction(grid, interpolate(f, grid.points(), order))


def dilate_function(f: GridFunction,
                    group: HomogeneousGroup,
                    r: float,
                    order: int = 1) -> GridFunction:
    """``f o delta_r`` resampled on the grid of ``f``, zero where
    ``delta_r(x)`` leaves the box."""
    if r <= 0:
        raise ValueError(f'dilation factor must be positive, got {r}')
    if r == 1:
        return f
    points = group.dilate(f.grid.points(), r)
    return GridFunction(f.grid, interpolate(f, points, order))
