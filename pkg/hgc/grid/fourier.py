# Copyright (c) SI-Analytics. All rights reserved.
import numpy as np

from hgc.utils import GridError
from .grid import Grid, GridFunction


def is_power_of_two(grid: Grid) -> bool:
    return not any(n & (n - 1) for n in grid.sizes)


def _check_power_of_two(grid: Grid) -> None:
    if not is_power_of_two(grid):
        raise GridError(
            f'discrete Fourier transforms need power-of-two axis sizes, '
            f'got {grid.sizes}')


def dft(f: GridFunction) -> GridFunction:
    """Sampled Euclidean transform ``int f(x) exp(-2 pi i x.xi) dx``.

    The result lives on ``f.grid.frequency_grid()`` with the zero
    frequency at the center sample, matching the continuous transform up
    to discretization error for functions decaying inside the box.

    Raises:
        GridError: If an axis size is not a power of two.
    """
    grid = f.grid
    _check_power_of_two(grid)
    values = np.fft.fftshift(np.fft.fftn(np.fft.ifftshift(f.values)))
    return GridFunction(grid.frequency_grid(), values * grid.cell_volume)


def idft(f: GridFunction) -> GridFunction:
    """Inverse of :func:`dft`, ``int F(xi) exp(2 pi i x.xi) d xi``."""
    grid = f.grid
    _check_power_of_two(grid)
    values = np.fft.fftshift(np.fft.ifftn(np.fft.ifftshift(f.values)))
    space = grid.frequency_grid()
    return GridFunction(space, values / space.cell_volume)


def frequencies(grid: Grid) -> np.ndarray:
    """Points of the frequency grid paired with ``grid``."""
    return grid.frequency_grid().points()
