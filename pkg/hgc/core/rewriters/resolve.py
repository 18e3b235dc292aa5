# Copyright (c) SI-Analytics. All rights reserved.
from typing import Dict, Optional, Sequence

import numpy as np

from hgc.grid import Grid
from hgc.groups import build_group
from hgc.multipliers import build_multiplier
from hgc.utils import ConfigError, GridError, GroupLawError
from .base import BaseRewriter
from .builder import REWRITERS


@REWRITERS.register_module()
class ResolveGroup(BaseRewriter):
    """Replace a group name, file path or definition with the group."""

    def __init__(self, key: str = 'group'):
        self.key = key

    def __call__(self, context: Dict) -> Dict:
        try:
            context[self.key] = build_group(context[self.key])
        except (GroupLawError, KeyError, OSError) as err:
            raise ConfigError(f'cannot resolve "{self.key}": {err}') from err
        return context


@REWRITERS.register_module()
class BuildGrid(BaseRewriter):
    """Turn a ``{extent, size}`` block into a :class:`Grid`.

    A missing block falls back to ``default`` when given; the grid
    dimension follows the resolved group.
    """

    def __init__(self,
                 key: str = 'grid',
                 group_key: str = 'group',
                 default: Optional[dict] = None):
        self.key = key
        self.group_key = group_key
        self.default = default

    def __call__(self, context: Dict) -> Dict:
        cfg = context.get(self.key) or self.default
        if isinstance(cfg, Grid):
            return context
        if cfg is None:
            raise ConfigError(f'"{self.key}" is required')
        dim = context[self.group_key].dim
        try:
            context[self.key] = Grid.from_cfg(cfg, dim)
        except (GridError, KeyError, ValueError, TypeError) as err:
            raise ConfigError(f'invalid "{self.key}" block {cfg}: '
                              f'{err}') from err
        return context


@REWRITERS.register_module()
class ResolveMultipliers(BaseRewriter):
    """Build the multipliers named under ``keys`` on the resolved group;
    keys holding ``None`` are left alone."""

    def __init__(self, keys: Sequence[str], group_key: str = 'group'):
        self.keys = list(keys)
        self.group_key = group_key

    def __call__(self, context: Dict) -> Dict:
        group = context[self.group_key]
        for key in self.keys:
            if context.get(key) is None:
                continue
            try:
                context[key] = build_multiplier(context[key], group)
            except (KeyError, TypeError, ValueError) as err:
                raise ConfigError(f'cannot build multiplier "{key}": '
                                  f'{err}') from err
        return context


@REWRITERS.register_module()
class SeedRandom(BaseRewriter):
    """Replace the integer seed with ``numpy.random.Generator`` under
    ``dst``; the seed itself stays in the context."""

    def __init__(self, key: str = 'seed', dst: str = 'rng'):
        self.key = key
        self.dst = dst

    def __call__(self, context: Dict) -> Dict:
        context[self.dst] = np.random.default_rng(context.get(self.key, 0))
        return context
