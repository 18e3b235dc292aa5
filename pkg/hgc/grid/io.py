# Copyright (c) SI-Analytics. All rights reserved.
import os.path as osp
from typing import Optional, Sequence

import mmcv
import numpy as np

from hgc.utils import GridError
from .grid import Grid, GridFunction


def _sidecar(path: str) -> str:
    return path + '.json'


def save_grid_function(f: GridFunction, path: str) -> str:
    """Write ``f`` as flat little-endian doubles plus a JSON sidecar.

    Real-valued samples are stored as ``<f8``, others as interleaved
    ``<c16``. The sidecar at ``path + '.json'`` records ``dims``,
    ``extents``, ``steps``, ``complex`` and ``band``.

    Returns:
        str: The path of the binary file.
    """
    mmcv.mkdir_or_exist(osp.dirname(osp.abspath(path)))
    is_complex = bool(np.any(f.values.imag))
    data = f.values if is_complex else f.values.real
    data.astype('<c16' if is_complex else '<f8').tofile(path)
    mmcv.dump(
        dict(
            dims=list(f.grid.sizes),
            extents=list(f.grid.extents),
            steps=list(f.grid.steps),
            complex=is_complex,
            band=list(f.band)),
        _sidecar(path),
        file_format='json',
        indent=2)
    return path


def load_grid_function(path: str) -> GridFunction:
    """Inverse of :func:`save_grid_function`."""
    meta = mmcv.load(_sidecar(path), file_format='json')
    grid = Grid(tuple(float(r) for r in meta['extents']),
                tuple(int(n) for n in meta['dims']))
    dtype = '<c16' if meta['complex'] else '<f8'
    data = np.fromfile(path, dtype=dtype)
    if data.size != grid.num_points:
        raise GridError(f'{path} holds {data.size} samples, sidecar '
                        f'expects {grid.num_points}')
    return GridFunction(grid, data.reshape(grid.shape),
                        tuple(meta.get('band', ())))


def save_csv_slice(f: GridFunction,
                   path: str,
                   axes: Sequence[int] = (0, ),
                   index: Optional[Sequence[int]] = None) -> str:
    """Export a 1-d or 2-d slice as CSV rows of coordinates, real and
    imaginary part.

    Args:
        f (GridFunction): The samples.
        path (str): Output file.
        axes (Sequence[int]): The one or two free axes.
        index (Sequence[int], optional): Grid index of the fixed axes.
            Defaults to the origin.
    """
    axes = tuple(axes)
    if not 1 <= len(axes) <= 2 or len(set(axes)) != len(axes):
        raise GridError(f'a CSV slice needs one or two distinct axes, got '
                        f'{axes}')
    grid = f.grid
    index = list(index if index is not None else grid.origin_index)
    selector = tuple(
        slice(None) if axis in axes else index[axis]
        for axis in range(grid.dim))
    values = f.values[selector].reshape(-1)
    points = grid.points()[selector][..., list(axes)].reshape(-1, len(axes))
    names = [f'x{axis}' for axis in axes] + ['real', 'imag']
    mmcv.mkdir_or_exist(osp.dirname(osp.abspath(path)))
    np.savetxt(
        path,
        np.column_stack([points, values.real, values.imag]),
        delimiter=',',
        header=','.join(names),
        comments='')
    return path
