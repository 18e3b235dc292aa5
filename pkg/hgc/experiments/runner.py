# Copyright (c) SI-Analytics. All rights reserved.
import os.path as osp
import time
from typing import Optional

import mmcv
import numpy as np

from hgc.apis import log_report
from hgc.utils import ConfigError, cfg_to_dict, dump_cfg, get_root_logger
from .base import Diagnostics, ExperimentReport
from .builder import SCENARIOS, build_scenario

REPORT_FILE = 'report.json'


def list_scenarios() -> dict:
    """Scenario name to its description and parameter schema."""
    catalog = {}
    for name in sorted(SCENARIOS.module_dict):
        scenario = build_scenario(name)
        doc = (scenario.__class__.__doc__ or '').strip().splitlines()
        catalog[name] = dict(
            description=doc[0] if doc else '', params=scenario.catalog())
    return catalog


def validate(cfg) -> Diagnostics:
    """Schema and resolvability checks without computing anything."""
    cfg = cfg_to_dict(cfg)
    name = cfg.get('scenario')
    if name is None:
        return Diagnostics(errors=['missing required field "scenario"'])
    if SCENARIOS.get(name) is None:
        return Diagnostics(errors=[
            f'unknown scenario "{name}", expected one of '
            f'{sorted(SCENARIOS.module_dict)}'
        ])
    return build_scenario(name).validate(cfg)


def write_report(report: ExperimentReport, out_dir: str) -> str:
    """Write ``report.json`` with sorted keys and one CSV per series.

    Returns:
        str: Path of the JSON report.
    """
    mmcv.mkdir_or_exist(out_dir)
    for name, (columns, rows) in report.series.items():
        np.savetxt(
            osp.join(out_dir, f'{name}.csv'),
            np.array(rows, dtype=object).reshape(len(rows), len(columns)),
            fmt='%s',
            delimiter=',',
            header=','.join(columns),
            comments='')
    path = osp.join(out_dir, REPORT_FILE)
    mmcv.dump(
        report.to_dict(), path, file_format='json', sort_keys=True, indent=2)
    return path


def run_experiment(cfg,
                   out_dir: Optional[str] = None) -> ExperimentReport:
    """Validate, run and write one experiment.

    Args:
        cfg (Config | dict): The flat experiment config.
        out_dir (str, optional): Output directory; beats ``cfg.out_dir``,
            which beats ``work_dirs/<scenario>``.

    Returns:
        ExperimentReport: The report, also written to ``out_dir``.

    Raises:
        ConfigError: If the config does not validate.
    """
    cfg = cfg_to_dict(cfg)
    diag = validate(cfg)
    if not diag.valid:
        raise ConfigError('; '.join(diag.errors))
    logger = get_root_logger()
    for warning in diag.warnings:
        logger.warning(warning)

    out_dir = out_dir or cfg.get('out_dir') or osp.join(
        'work_dirs', cfg['scenario'])
    cfg['out_dir'] = out_dir
    mmcv.mkdir_or_exist(out_dir)
    dump_cfg(cfg, osp.join(out_dir, 'config.json'))

    scenario = build_scenario(cfg['scenario'])
    logger.info(f'running {scenario.name}')
    start = time.perf_counter()
    report = scenario.context_aware_run(cfg)
    report.timing['total_seconds'] = time.perf_counter() - start
    write_report(report, out_dir)
    log_report(report, out_dir)
    return report
