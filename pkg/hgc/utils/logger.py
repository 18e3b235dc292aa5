# Copyright (c) SI-Analytics. All rights reserved.
import logging
from typing import Optional, Union

from mmcv.utils import get_logger


def get_root_logger(log_file: Optional[str] = None,
                    log_level: Union[int, str] = logging.INFO
                    ) -> logging.Logger:
    """Get the package logger named "hgc".

    The first call installs a StreamHandler; passing ``log_file`` on that
    call also attaches a FileHandler. Later calls return the same logger.

    Args:
        log_file (str, optional): The log filename.
        log_level (int | str): The logger level, either a ``logging``
            constant or its name such as ``'DEBUG'``.

    Returns:
        logging.Logger: The package logger.
    """
    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
    return get_logger(name='hgc', log_file=log_file, log_level=log_level)
