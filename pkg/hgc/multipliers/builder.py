# Copyright (c) SI-Analytics. All rights reserved.
from typing import Optional, Union

from mmcv.utils import Registry

from hgc.groups import HomogeneousGroup, build_group

MULTIPLIERS = Registry('multiplier')


def build_multiplier(cfg: Union[str, dict, object],
                     group: Optional[HomogeneousGroup] = None):
    """Build a multiplier from its registry name or config.

    Args:
        cfg (str | dict | Multiplier): ``'JapaneseBracket'`` or
            ``dict(type='JapaneseBracket', order=1)``; a built multiplier
            is returned as is.
        group (HomogeneousGroup, optional): Group used when the config
            does not name one.

    Returns:
        Multiplier: The multiplier.
    """
    if isinstance(cfg, str):
        cfg = dict(type=cfg)
    if not isinstance(cfg, dict):
        return cfg
    cfg = dict(cfg)
    if 'group' in cfg:
        cfg['group'] = build_group(cfg['group'])
    elif group is not None:
        cfg['group'] = group
    if 'base' in cfg:
        cfg['base'] = build_multiplier(cfg['base'], cfg.get('group', group))
    if 'terms' in cfg:
        cfg['terms'] = [
            build_multiplier(t, cfg.get('group', group)) for t in cfg['terms']
        ]
    if 'factors' in cfg:
        cfg['factors'] = [
            build_multiplier(f, cfg.get('group', group))
            for f in cfg['factors']
        ]
    return MULTIPLIERS.build(cfg)
