# Copyright (c) SI-Analytics. All rights reserved.
from typing import Union

from hgc.grid import Grid, GridFunction, dft, idft
from .multiplier import Multiplier


def kernel_of(m: Union[Multiplier, GridFunction],
              grid: Grid = None) -> GridFunction:
    """Convolution kernel of a multiplier, its inverse transform.

    Args:
        m (Multiplier | GridFunction): The multiplier, or its samples on
            a frequency grid.
        grid (Grid, optional): Space grid of the kernel; required for a
            closed-form multiplier, which is sampled on its frequency
            grid.
    """
    if isinstance(m, GridFunction):
        return idft(m)
    if grid is None:
        raise ValueError('kernel_of needs a space grid for a multiplier')
    return idft(m.sample(grid.frequency_grid()))


def multiplier_of(kernel: GridFunction) -> GridFunction:
    """Multiplier of a sampled kernel, its forward transform."""
    return dft(kernel)
