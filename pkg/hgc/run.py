# Copyright (c) SI-Analytics. All rights reserved.
import argparse
import json
import logging
import sys
from os import path as osp
from typing import Optional, Sequence

import mmcv
import ray
from mmcv import DictAction

from hgc.experiments import list_scenarios, run_experiment, validate
from hgc.utils import (HgcError, get_root_logger, load_config,
                       resolve_threads)

EXIT_OK = 0
EXIT_FAILED_CHECK = 1


def parse_args(args: Optional[Sequence[str]] = None):
    parser = argparse.ArgumentParser(
        prog='hgc', description='Run harmonic analysis experiments')
    sub = parser.add_subparsers(dest='command', required=True)

    run_parser = sub.add_parser('run', help='run an experiment config')
    run_parser.add_argument('--config', required=True, help='config path')
    run_parser.add_argument(
        '--out', default=None, help='the dir to save reports and CSV files')
    run_parser.add_argument(
        '--threads',
        type=int,
        default=None,
        help='worker cap; defaults to $HGC_THREADS, then 1')
    run_parser.add_argument(
        '--validate-only',
        action='store_true',
        help='validate the config and stop')
    run_parser.add_argument(
        '--cfg-options',
        nargs='+',
        action=DictAction,
        help='override some settings in the used config, the key-value pair '
        'in xxx=yyy format will be merged into config file. If the value to '
        'be overwritten is a list, it should be like key="[a,b]" or key=a,b '
        'Note that the quotation marks are necessary and that no white space '
        'is allowed.')

    sub.add_parser('list', help='list the scenarios and their parameters')

    validate_parser = sub.add_parser(
        'validate', help='check a config without computing')
    validate_parser.add_argument('--config', required=True, help='config path')
    validate_parser.add_argument(
        '--cfg-options', nargs='+', action=DictAction, help='overrides')
    return parser.parse_args(args)


def _print(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _validate(cfg) -> int:
    diag = validate(cfg)
    _print(diag.to_dict())
    return EXIT_OK if diag.valid else 2


def _run(args) -> int:
    cfg = load_config(args.config, args.cfg_options)
    if args.validate_only:
        return _validate(cfg)

    out_dir = args.out or cfg.get('out_dir') or osp.join(
        'work_dirs', cfg.get('scenario', 'experiment'))
    mmcv.mkdir_or_exist(out_dir)
    logger = get_root_logger(log_level=cfg.get('log_level', 'INFO'))
    handler = logging.FileHandler(osp.join(out_dir, 'hgc.log'), mode='w')
    logger.addHandler(handler)

    threads = resolve_threads(args.threads)
    if threads > 1 and not ray.is_initialized():
        ray.init(num_cpus=threads)
    try:
        report = run_experiment(cfg, out_dir)
    finally:
        logger.removeHandler(handler)
        handler.close()
        if ray.is_initialized():
            ray.shutdown()
    logger.info(f'{report.scenario}: '
                f'{"pass" if report.passed else "FAIL"} -> {out_dir}')
    return EXIT_OK if report.passed else EXIT_FAILED_CHECK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command line entry; returns the process exit status.

    0 when every check passes, 1 on a failed check, otherwise the
    ``exit_code`` of the escaping :class:`~hgc.utils.HgcError`.
    """
    args = parse_args(argv)
    try:
        if args.command == 'list':
            _print(list_scenarios())
            return EXIT_OK
        if args.command == 'validate':
            return _validate(load_config(args.config, args.cfg_options))
        return _run(args)
    except HgcError as err:
        get_root_logger().error(f'{type(err).__name__}: {err}')
        return err.exit_code


def cli() -> None:
    sys.exit(main())
