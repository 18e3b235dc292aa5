# Copyright (c) SI-Analytics. All rights reserved.
from .config import (THREADS_ENV, as_tuple, cfg_to_dict, dump_cfg,
                     load_config, resolve_threads)
from .errors import (ConfigError, DecayCertificateError, DivisionError,
                     GridError, GroupLawError, HgcError, ResourceGuardError)
from .logger import get_root_logger
from .parallel import parallel_map

__all__ = [
    'THREADS_ENV', 'as_tuple', 'cfg_to_dict', 'dump_cfg', 'load_config',
    'resolve_threads', 'ConfigError', 'DecayCertificateError',
    'DivisionError', 'GridError', 'GroupLawError', 'HgcError',
    'ResourceGuardError', 'get_root_logger', 'parallel_map'
]
