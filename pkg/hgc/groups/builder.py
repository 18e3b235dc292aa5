# Copyright (c) SI-Analytics. All rights reserved.
import json
import os.path as osp
from typing import Union

from mmcv.utils import Registry

from hgc.utils import GroupLawError
from .group import HomogeneousGroup

GROUPS = Registry('group')

# short names accepted in "name:dim" strings
_ALIASES = dict(
    euclidean='EuclideanGroup',
    heisenberg='HeisenbergGroup',
    triangular='TriangularGroup')


def parse_group_name(name: str) -> dict:
    """Turn ``'heisenberg:1'`` into ``dict(type='HeisenbergGroup', dim=1)``.

    Raises:
        GroupLawError: If the name is not a known built-in.
    """
    family, _, arg = name.partition(':')
    if family not in _ALIASES:
        raise GroupLawError(
            f'unknown group "{name}", expected one of '
            f'{sorted(_ALIASES)} as "<family>:<int>"')
    cfg = dict(type=_ALIASES[family])
    if arg:
        try:
            cfg['dim'] = int(arg)
        except ValueError as err:
            raise GroupLawError(f'invalid group size in "{name}"') from err
    return cfg


def load_group_file(path: str) -> HomogeneousGroup:
    """Load a JSON group definition ``{dimension, weights, law}``."""
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    data.setdefault('name', osp.splitext(osp.basename(path))[0])
    return build_group(data)


def build_group(cfg: Union[str, dict,
                           HomogeneousGroup]) -> HomogeneousGroup:
    """Build a group from a built-in name, a definition file or a config.

    Args:
        cfg (str | dict | HomogeneousGroup): ``'euclidean:2'``,
            ``'heisenberg:1'``, ``'triangular:4'``, a path to a JSON
            definition, a registry config ``dict(type=..., ...)`` or a
            definition dict with ``weights`` and ``law``.

    Returns:
        HomogeneousGroup: The group.
    """
    if isinstance(cfg, HomogeneousGroup):
        return cfg
    if isinstance(cfg, str):
        if cfg.endswith('.json') or osp.isfile(cfg):
            return load_group_file(cfg)
        return GROUPS.build(parse_group_name(cfg))
    if not isinstance(cfg, dict):
        raise GroupLawError(f'cannot build a group from {type(cfg)}')
    cfg = dict(cfg)
    if 'type' in cfg:
        return GROUPS.build(cfg)
    if 'weights' not in cfg:
        raise GroupLawError('group definition needs "weights"')
    dimension = cfg.pop('dimension', None)
    if dimension is not None and dimension != len(cfg['weights']):
        raise GroupLawError(
            f'dimension {dimension} does not match '
            f'{len(cfg["weights"])} weights')
    return GROUPS.build(dict(type='PolynomialGroup', **cfg))
