import os.path as osp
import tempfile

import mmcv
import numpy as np
import pytest

from hgc.grid import (Grid, GridFunction, load_grid_function, save_csv_slice,
                      save_grid_function)
from hgc.utils import GridError


def test_grid_function_round_trip():
    grid = Grid.regular(2, [1.0, 2.0], [8, 16])
    values = np.arange(128.0).reshape(8, 16) * (1.0 - 0.5j)
    f = GridFunction(grid, values, band=(2, 0))
    with tempfile.TemporaryDirectory() as tmpdir:
        path = save_grid_function(f, osp.join(tmpdir, 'f.bin'))
        meta = mmcv.load(path + '.json')
        assert meta['dims'] == [8, 16]
        assert meta['steps'] == [0.25, 0.25]
        assert meta['complex']
        assert osp.getsize(path) == 16 * 128
        loaded = load_grid_function(path)
        assert loaded.grid == grid
        assert loaded.band == (2, 0)
        np.testing.assert_array_equal(loaded.values, f.values)

        real = GridFunction(grid, values.real)
        path = save_grid_function(real, osp.join(tmpdir, 'sub', 'r.bin'))
        assert osp.getsize(path) == 8 * 128
        assert not mmcv.load(path + '.json')['complex']
        np.testing.assert_array_equal(
            load_grid_function(path).values, real.values)

        np.arange(5.0).tofile(path)
        with pytest.raises(GridError):
            load_grid_function(path)


def test_save_csv_slice():
    grid = Grid.regular(2, 1.0, 8)
    f = GridFunction(grid, np.ones((8, 8)))
    with tempfile.TemporaryDirectory() as tmpdir:
        path = save_csv_slice(f, osp.join(tmpdir, 'line.csv'))
        with open(path) as fp:
            lines = fp.read().splitlines()
        assert lines[0] == 'x0,real,imag'
        assert len(lines) == 9
        path = save_csv_slice(f, osp.join(tmpdir, 'plane.csv'), axes=(0, 1))
        with open(path) as fp:
            lines = fp.read().splitlines()
        assert lines[0] == 'x0,x1,real,imag'
        assert len(lines) == 65
        with pytest.raises(GridError):
            save_csv_slice(f, path, axes=(0, 0))
