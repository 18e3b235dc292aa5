import json
import os.path as osp
import tempfile
from unittest.mock import MagicMock, patch

from hgc.run import main
from hgc.utils import DecayCertificateError, ResourceGuardError


def write_config(tmpdir, **cfg):
    path = osp.join(tmpdir, 'experiment.json')
    with open(path, 'w') as f:
        json.dump(cfg, f)
    return path


def test_list(capsys):
    assert main(['list']) == 0
    catalog = json.loads(capsys.readouterr().out)
    assert len(catalog) == 7
    assert 'group-validate' in catalog


def test_validate(capsys):
    with tempfile.TemporaryDirectory() as tmpdir:
        path = write_config(tmpdir, scenario='group-validate')
        assert main(['validate', '--config', path]) == 2
        diag = json.loads(capsys.readouterr().out)
        assert not diag['valid']
        assert main([
            'validate', '--config', path, '--cfg-options',
            'group=euclidean:1'
        ]) == 0


def test_run():
    with tempfile.TemporaryDirectory() as tmpdir:
        path = write_config(
            tmpdir,
            scenario='group-validate',
            group='euclidean:1',
            num_samples=20)
        out_dir = osp.join(tmpdir, 'out')
        assert main(['run', '--config', path, '--out', out_dir]) == 0
        assert osp.exists(osp.join(out_dir, 'report.json'))
        assert osp.exists(osp.join(out_dir, 'hgc.log'))
        assert main(['run', '--config', path, '--validate-only']) == 0

        bad = write_config(tmpdir, scenario='group-validate', seed=0)
        assert main(['run', '--config', bad, '--out', out_dir]) == 2


@patch('hgc.run.run_experiment')
def test_exit_codes(mock_run):
    with tempfile.TemporaryDirectory() as tmpdir:
        path = write_config(tmpdir, scenario='group-validate')
        args = ['run', '--config', path, '--out', tmpdir]

        mock_run.return_value = MagicMock(passed=False, scenario='x')
        assert main(args) == 1
        mock_run.return_value = MagicMock(passed=True, scenario='x')
        assert main(args) == 0

        mock_run.side_effect = DecayCertificateError('no decay')
        assert main(args) == 3
        mock_run.side_effect = ResourceGuardError('too large')
        assert main(args) == 4


@patch('hgc.run.run_experiment')
@patch('hgc.run.ray')
def test_threads(mock_ray, mock_run):
    mock_ray.is_initialized.return_value = False
    mock_run.return_value = MagicMock(passed=True, scenario='x')
    with tempfile.TemporaryDirectory() as tmpdir:
        path = write_config(tmpdir, scenario='group-validate')
        assert main(
            ['run', '--config', path, '--out', tmpdir, '--threads', '2']) == 0
        mock_ray.init.assert_called_once_with(num_cpus=2)

        mock_ray.init.reset_mock()
        assert main(
            ['run', '--config', path, '--out', tmpdir, '--threads', '1']) == 0
        mock_ray.init.assert_not_called()
