# Copyright (c) SI-Analytics. All rights reserved.
import logging
import os
from os import path as osp
from pprint import pformat
from typing import Optional

import mmcv

from hgc.utils import get_root_logger

REPORT_LOG = 'report.log'


def log_report(report, log_dir: Optional[str] = None) -> str:
    """Log the verdict of an experiment to ``<log_dir>/report.log``.

    Args:
        report (ExperimentReport): The finished report.
        log_dir (str, optional): The log dir. Defaults to the working
            directory.

    Returns:
        str: Path of the log file.
    """
    log_dir = log_dir or os.getcwd()
    mmcv.mkdir_or_exist(log_dir)
    path = osp.join(log_dir, REPORT_LOG)

    logger = get_root_logger()
    handler = logging.FileHandler(path, mode='w', encoding='utf-8')
    handler.setFormatter(
        logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - '
                          '%(message)s'))
    logger.addHandler(handler)
    try:
        verdict = 'PASS' if report.passed else 'FAIL'
        logger.info(f'Scenario: {report.scenario} ({verdict})')
        for check in report.checks:
            mark = 'ok' if check.passed else 'FAILED'
            logger.info(f'  [{mark}] {check.name} = {check.value:.6g} '
                        f'{check.comparison} {check.threshold:.6g} '
                        f'({check.invariant})')
        logger.info(f'Measurements: \n{pformat(report.measurements)}')
        logger.info(f'Timing: {report.timing}')
    finally:
        logger.removeHandler(handler)
        handler.close()
    return path
