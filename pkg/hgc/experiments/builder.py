# Copyright (c) SI-Analytics. All rights reserved.
from typing import Dict, Union

from mmcv.utils import Registry

from hgc.utils import ConfigError

SCENARIOS = Registry('scenario')


def build_scenario(cfg: Union[str, Dict]):
    """Build a scenario from its name (``'fj-lemma'``) or a config with
    ``type``.

    Raises:
        ConfigError: If the scenario is unknown.
    """
    if isinstance(cfg, str):
        cfg = dict(type=cfg)
    if SCENARIOS.get(cfg.get('type')) is None:
        raise ConfigError(f'unknown scenario "{cfg.get("type")}", expected '
                          f'one of {sorted(SCENARIOS.module_dict)}')
    return SCENARIOS.build(cfg)
