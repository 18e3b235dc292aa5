import json
import tempfile
from os import path as osp

import mmcv
import pytest
from mmcv.utils import Config

from hgc.utils import (THREADS_ENV, as_tuple, cfg_to_dict, dump_cfg,
                       load_config, resolve_threads)


def test_dump_cfg():
    cfg = Config(dict(scenario='group-validate', group='euclidean:1'))

    with tempfile.TemporaryDirectory() as tmpdir:
        save_path = osp.join(tmpdir, 'config.json')
        assert dump_cfg(cfg, save_path)
        assert osp.exists(save_path)
        assert mmcv.load(save_path) == dict(
            group='euclidean:1', scenario='group-validate')
        assert dump_cfg(dict(seed=1), osp.join(tmpdir, 'plain.json'))
        assert not dump_cfg(
            dict(bad=object()), osp.join(tmpdir, 'broken.json'))


def test_load_config():
    with tempfile.TemporaryDirectory() as tmpdir:
        with open(osp.join(tmpdir, 'base.json'), 'w') as f:
            json.dump(dict(group='heisenberg:1', seed=0), f)
        path = osp.join(tmpdir, 'experiment.json')
        with open(path, 'w') as f:
            json.dump(
                dict(_base_=['base.json'], scenario='group-validate'), f)
        cfg = load_config(path)
        assert cfg.group == 'heisenberg:1'
        assert cfg.scenario == 'group-validate'

        cfg = load_config(path, dict(seed=5, num_samples=10))
        assert cfg_to_dict(cfg) == dict(
            group='heisenberg:1',
            seed=5,
            scenario='group-validate',
            num_samples=10)


def test_resolve_threads():
    assert resolve_threads(4, {}) == 4
    assert resolve_threads(0, {}) == 1
    assert resolve_threads(None, {THREADS_ENV: '3'}) == 3
    assert resolve_threads(2, {THREADS_ENV: '3'}) == 2
    assert resolve_threads(None, {THREADS_ENV: ' '}) == 1
    assert resolve_threads(None, {}) == 1


def test_as_tuple():
    assert as_tuple(2.0, 3) == (2.0, 2.0, 2.0)
    assert as_tuple([1, 2], 2) == (1, 2)
    with pytest.raises(ValueError):
        as_tuple([1, 2], 3, 'size')
