# Copyright (c) SI-Analytics. All rights reserved.
import os.path as osp
from typing import Optional

import mmcv

from hgc.grid import Grid, load_grid_function, save_grid_function
from hgc.groups import build_group
from hgc.utils import get_root_logger
from .decomposition import DyadicDecomposition

MANIFEST = 'manifest.json'


def _piece_file(k: int) -> str:
    return f'piece_{k:03d}.bin'


def save_decomposition(dd: DyadicDecomposition,
                       out_dir: str,
                       seminorms: Optional[dict] = None) -> str:
    """Write the sampled frequency pieces and a manifest to ``out_dir``.

    The manifest holds ``j``, ``K``, the group definition, the kernel
    grid, the piece files and the optional seminorm table.

    Returns:
        str: Path of the manifest.
    """
    mmcv.mkdir_or_exist(out_dir)
    files = []
    for k in range(len(dd)):
        name = _piece_file(k)
        save_grid_function(dd.piece(k), osp.join(out_dir, name))
        files.append(name)
    manifest = dict(
        j=dd.order,
        K=dd.K,
        group=dd.group.to_dict(),
        kernel_grid=dd.kernel_grid.to_dict(),
        pieces=files,
        seminorms=seminorms or {})
    path = osp.join(out_dir, MANIFEST)
    mmcv.dump(manifest, path, file_format='json', sort_keys=True, indent=2)
    get_root_logger().info(f'saved {len(files)} pieces to {out_dir}')
    return path


def load_decomposition(out_dir: str) -> DyadicDecomposition:
    """Read a decomposition written by :func:`save_decomposition`; pieces
    come back as samples."""
    manifest = mmcv.load(osp.join(out_dir, MANIFEST), file_format='json')
    group = build_group(manifest['group'])
    grid = manifest['kernel_grid']
    kernel_grid = Grid(tuple(grid['extent']), tuple(grid['size']))
    pieces = [
        load_grid_function(osp.join(out_dir, name))
        for name in manifest['pieces']
    ]
    return DyadicDecomposition(group, manifest['j'], pieces, kernel_grid)
