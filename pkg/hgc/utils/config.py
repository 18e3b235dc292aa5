# Copyright (c) SI-Analytics. All rights reserved.
import os
from typing import Optional, Sequence

import mmcv
from mmcv.utils import Config

THREADS_ENV = 'HGC_THREADS'


def dump_cfg(cfg: Config, save_path: str) -> bool:
    """Dump the config as sorted JSON.

    Args:
        cfg (Config): The config to be dumped.
        save_path (str): The path to save the config.

    Returns:
        bool: Whether the config is dumped successfully.
    """
    try:
        mmcv.dump(
            cfg_to_dict(cfg),
            save_path,
            file_format='json',
            sort_keys=True,
            indent=2)
        return True
    except Exception as err:
        from hgc.utils import get_root_logger
        logger = get_root_logger()
        logger.error(f'Failed to dump config to {save_path}: {err}')
        return False


def cfg_to_dict(cfg) -> dict:
    """Plain ``dict`` view of a :class:`Config` (or any mapping)."""
    if isinstance(cfg, Config):
        return cfg._cfg_dict.to_dict()
    return dict(cfg)


def load_config(path: str, cfg_options: Optional[dict] = None) -> Config:
    """Load an experiment config and merge command line overrides.

    Args:
        path (str): Config file path (``.json``, ``.py`` or ``.yaml``).
        cfg_options (dict, optional): Overrides from ``--cfg-options``.

    Returns:
        Config: The merged config.
    """
    cfg = Config.fromfile(path)
    if cfg_options:
        cfg.merge_from_dict(cfg_options)
    return cfg


def resolve_threads(threads: Optional[int] = None,
                    environ: Optional[dict] = None) -> int:
    """Resolve the worker cap: CLI value, then ``HGC_THREADS``, then 1."""
    if threads is not None:
        return max(int(threads), 1)
    environ = os.environ if environ is None else environ
    value = environ.get(THREADS_ENV)
    if value is None or not value.strip():
        return 1
    return max(int(value), 1)


def as_tuple(value, length: int, name: str = 'value') -> tuple:
    """Broadcast a scalar or check a sequence against ``length``."""
    if isinstance(value, Sequence) and not isinstance(value, str):
        value = tuple(value)
        if len(value) != length:
            raise ValueError(
                f'{name} has {len(value)} entries, expected {length}')
        return value
    return (value, ) * length
