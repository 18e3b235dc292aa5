# Copyright (c) SI-Analytics. All rights reserved.
from typing import Sequence, Union

import numpy as np

from hgc.groups import Multiindex, VectorFieldTable
from hgc.utils import GridError
from .fourier import dft, idft
from .grid import GridFunction

MAX_DERIVATIVE_ORDER = 6
STENCIL_WIDTH = 2

_FIRST = ((2, -1.0), (1, 8.0), (-1, -8.0), (-2, 1.0))
_SECOND = ((2, -1.0), (1, 16.0), (0, -30.0), (-1, 16.0), (-2, -1.0))


def _stencil(values: np.ndarray, axis: int, taps, scale: float) -> np.ndarray:
    out = np.zeros_like(values)
    for shift, weight in taps:
        # np.roll(v, -s)[m] == v[m + s]
        out = out + weight * np.roll(values, -shift, axis=axis)
    return out / scale


def _as_entries(alpha: Union[Multiindex, Sequence[int]]) -> tuple:
    if isinstance(alpha, Multiindex):
        return alpha.entries
    return tuple(int(a) for a in alpha)


def partial_derivative(f: GridFunction,
                       alpha: Union[Multiindex, Sequence[int]],
                       method: str = 'fd') -> GridFunction:
    """``d^alpha f`` on the grid.

    ``method='fd'`` composes fourth-order central differences and widens
    the invalid boundary band by the stencil width per application;
    ``method='spectral'`` multiplies by ``(2 pi i xi)^alpha`` on the
    transform side and keeps the band.

    Raises:
        GridError: If ``||alpha|| > 6`` or the length of ``alpha`` does
            not match the grid.
    """
    entries = _as_entries(alpha)
    grid = f.grid
    if len(entries) != grid.dim:
        raise GridError(f'multiindex {entries} on a {grid.dim}-dim grid')
    if any(a < 0 for a in entries):
        raise GridError(f'negative multiindex entry in {entries}')
    if sum(entries) > MAX_DERIVATIVE_ORDER:
        raise GridError(f'derivative order {sum(entries)} exceeds '
                        f'{MAX_DERIVATIVE_ORDER}')
    if not any(entries):
        return f
    if method == 'spectral':
        out = f
        for axis, a in enumerate(entries):
            for _ in range(a):
                out = spectral_derivative(out, axis)
        return out
    if method != 'fd':
        raise GridError(f'unknown derivative method {method}')

    values = f.values
    band = list(f.band)
    for axis, (a, h) in enumerate(zip(entries, grid.steps)):
        while a >= 2:
            values = _stencil(values, axis, _SECOND, 12.0 * h * h)
            band[axis] += STENCIL_WIDTH
            a -= 2
        if a:
            values = _stencil(values, axis, _FIRST, 12.0 * h)
            band[axis] += STENCIL_WIDTH
    return GridFunction(grid, values, tuple(band))


def spectral_derivative(f: GridFunction, axis: int) -> GridFunction:
    """``d/dx_axis f`` via ``idft(2 pi i xi_axis dft(f))``.

    Exact for trigonometric polynomials resolved by the grid.
    """
    transform = dft(f)
    xi = transform.grid.points()[..., axis]
    out = idft(transform.with_values(2j * np.pi * xi * transform.values))
    return GridFunction(f.grid, out.values, f.band)


def apply_vector_field(table: VectorFieldTable,
                       f: GridFunction,
                       j: int,
                       method: str = 'fd') -> GridFunction:
    """``X_j f = d_j f + sum_k p_{j,k}(x) d_k f`` on the grid."""
    unit = Multiindex.unit(j, table.dim)
    out = partial_derivative(f, unit, method)
    points = f.grid.points()
    for k, coeff in enumerate(table.coeffs[j]):
        if coeff.is_zero():
            continue
        term = partial_derivative(f, Multiindex.unit(k, table.dim), method)
        out = out + term * coeff(points)
    return out
