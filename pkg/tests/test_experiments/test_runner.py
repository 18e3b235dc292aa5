import os.path as osp
import tempfile

import mmcv
import pytest

from hgc.experiments import list_scenarios, run_experiment, validate
from hgc.utils import ConfigError

SCENARIO_NAMES = [
    'abelian-oracle', 'asymptotic-sum', 'compose-kernels',
    'decompose-reconstruct', 'fj-lemma', 'group-validate', 'psido-apply'
]


def test_list_scenarios():
    catalog = list_scenarios()
    assert sorted(catalog) == SCENARIO_NAMES
    for entry in catalog.values():
        assert entry['description']
        assert isinstance(entry['params'], dict)
    assert catalog['fj-lemma']['params']['J']['default'] == 2.0


def test_validate():
    diag = validate(dict(group='euclidean:1'))
    assert diag.errors == ['missing required field "scenario"']

    diag = validate(dict(scenario='no-such-scenario', group='euclidean:1'))
    assert not diag.valid
    assert 'unknown scenario' in diag.errors[0]

    diag = validate(dict(scenario='group-validate'))
    assert 'missing required field "group"' in diag.errors

    diag = validate(
        dict(scenario='group-validate', group='euclidean:1', bogus=1))
    assert diag.errors == ['unknown key "bogus"']

    diag = validate(
        dict(scenario='group-validate', group='euclidean:1',
             num_samples='ten'))
    assert '"num_samples" must be of type int' in diag.errors[0]

    diag = validate(dict(scenario='group-validate', group='unknown:1'))
    assert diag.errors[0].startswith('cannot resolve "group"')

    diag = validate(
        dict(
            scenario='decompose-reconstruct',
            group='euclidean:1',
            multiplier='NoSuchMultiplier'))
    assert diag.errors == [
        'unknown multiplier "NoSuchMultiplier" in "multiplier"'
    ]

    diag = validate(
        dict(scenario='abelian-oracle', group='heisenberg:1'))
    assert not diag.valid

    diag = validate(dict(scenario='compose-kernels', group='euclidean:1', K=0))
    assert diag.valid
    assert diag.warnings == ['K = 0 composes a single piece']

    diag = validate(
        dict(scenario='fj-lemma', group='euclidean:1', sigma_range=[3, 1]))
    assert not diag.valid

    cube = dict(extent=6.0, size=48)
    diag = validate(
        dict(scenario='compose-kernels', group='heisenberg:1', grid=cube))
    assert diag.errors == [
        '"grid" sizes [48, 48, 48] must be powers of two for '
        'compose-kernels, which takes discrete Fourier transforms'
    ]
    assert not validate(
        dict(scenario='abelian-oracle', group='euclidean:1',
             grid=dict(extent=8.0, size=96))).valid
    assert validate(
        dict(scenario='fj-lemma', group='heisenberg:1', grid=cube)).valid

    diag = validate(
        dict(scenario='group-validate', group='euclidean:1',
             grid=dict(extent=1.0, size=7)))
    assert diag.errors[0].startswith('invalid "grid"')


def test_validate_config_files():
    root = osp.join(osp.dirname(__file__), '..', '..', 'configs')
    paths = list(mmcv.scandir(root, '.json', recursive=True))
    paths = [p for p in paths if not p.startswith('_base_')]
    assert paths
    for path in paths:
        cfg = mmcv.Config.fromfile(osp.join(root, path))
        assert validate(cfg).valid, path


def test_run_group_validate():
    cfg = dict(scenario='group-validate', group='euclidean:2', num_samples=50)
    with tempfile.TemporaryDirectory() as tmpdir:
        report = run_experiment(cfg, tmpdir)
        assert report.passed
        for name in ('report.json', 'config.json', 'annulus.csv',
                     'report.log'):
            assert osp.exists(osp.join(tmpdir, name)), name
        data = mmcv.load(osp.join(tmpdir, 'report.json'))
        assert data['scenario'] == 'group-validate'
        assert data['passed']
        assert data['config']['group'] == 'euclidean:2'
        assert data['series'] == dict(annulus='annulus.csv')
        with open(osp.join(tmpdir, 'annulus.csv')) as f:
            lines = f.read().splitlines()
        assert lines[0] == 'r,scaled_integral'
        assert len(lines) == 5
        assert mmcv.load(osp.join(tmpdir, 'config.json'))['out_dir'] == tmpdir


def test_report_is_deterministic():
    cfg = dict(scenario='group-validate', group='heisenberg:1',
               num_samples=100, seed=4)
    reports = []
    for _ in range(2):
        with tempfile.TemporaryDirectory() as tmpdir:
            run_experiment(dict(cfg), tmpdir)
            data = mmcv.load(osp.join(tmpdir, 'report.json'))
        data.pop('timing')
        data['config'].pop('out_dir')
        reports.append(data)
    assert reports[0] == reports[1]


def test_run_decompose_reconstruct():
    cfg = dict(
        scenario='decompose-reconstruct',
        group='euclidean:1',
        multiplier=dict(type='JapaneseBracket', power=1),
        K=6,
        seminorm_order=1,
        archive=True)
    with tempfile.TemporaryDirectory() as tmpdir:
        report = run_experiment(cfg, tmpdir)
        names = [check.name for check in report.checks]
        assert names == [
            'round_trip', 'partition_of_unity', 'order',
            'derivative_order_drop'
        ]
        assert report.passed
        assert osp.exists(osp.join(tmpdir, 'pieces.csv'))
        assert osp.exists(osp.join(tmpdir, 'decomposition', 'manifest.json'))
        assert report.measurements['archive'] == osp.join(
            'decomposition', 'manifest.json')


def test_run_invalid():
    with tempfile.TemporaryDirectory() as tmpdir:
        with pytest.raises(ConfigError):
            run_experiment(dict(scenario='group-validate'), tmpdir)


def test_run_fj_lemma():
    cfg = dict(scenario='fj-lemma', group='euclidean:1', sigma_range=[0, 2])
    with tempfile.TemporaryDirectory() as tmpdir:
        report = run_experiment(dict(cfg), tmpdir)
        checks = {check.name: check for check in report.checks}
        assert list(checks) == ['finite_ratios', 'band_ratio', 'origin_ratio']
        assert report.passed
        assert report.measurements['origin_exact'] == pytest.approx(0.5)
        assert checks['origin_ratio'].value < 2e-3
        assert osp.exists(osp.join(tmpdir, 'fj.csv'))

    # the origin check reads the grid convolution, so a coarse grid fails it
    cfg.update(grid=dict(extent=32.0, size=256), origin_tol=1e-3)
    with tempfile.TemporaryDirectory() as tmpdir:
        report = run_experiment(cfg, tmpdir)
        checks = {check.name: check for check in report.checks}
        assert not checks['origin_ratio'].passed
        assert not report.passed

    # no sigma = nu = 0 in the sweep, no origin check
    cfg = dict(scenario='fj-lemma', group='euclidean:1', sigma_range=[1, 2],
               grid=dict(extent=16.0, size=256))
    with tempfile.TemporaryDirectory() as tmpdir:
        report = run_experiment(cfg, tmpdir)
        assert 'origin_ratio' not in [check.name for check in report.checks]
