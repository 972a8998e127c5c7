import io
import json
import os.path as osp
import sys

import numpy as np
import pytest

from matnormdiag.core import MatrixDataset
from matnormdiag.io import cli_main, read_matrix_stack, write_matrix_stack


def _last_json(text):
    return json.loads(text.strip().splitlines()[-1])


@pytest.fixture
def stack(tmp_path):
    path = str(tmp_path / 'data.txt')
    assert cli_main([
        'simulate', '--samples', '200', '--rows', '2', '--cols', '2',
        '--seed', '42', '--out', path
    ]) == 0
    return path


def test_simulate(stack):
    data = read_matrix_stack(stack)
    assert data.data.shape == (200, 2, 2)
    with open(stack) as f:
        assert f.readline().startswith('#')


def test_simulate_deterministic(tmp_path, stack):
    again = str(tmp_path / 'again.txt')
    cli_main([
        'simulate', '--samples', '200', '--rows', '2', '--cols', '2',
        '--seed', '42', '--out', again
    ])
    with open(stack) as f, open(again) as g:
        assert f.read() == g.read()


def test_simulate_from_fit(tmp_path, stack):
    out = str(tmp_path / 'resampled.txt')
    assert cli_main([
        'simulate', '--samples', '10', '--seed', '1', '--from-fit', stack,
        '--out', out
    ]) == 0
    assert read_matrix_stack(out).data.shape == (10, 2, 2)


def test_simulate_needs_shape(tmp_path, capsys):
    code = cli_main([
        'simulate', '--samples', '10', '--seed', '1', '--out',
        str(tmp_path / 'x.txt')
    ])
    assert code == 1
    assert _last_json(capsys.readouterr().err)['error'] == 'UsageError'


def test_lrt(stack, capsys):
    assert cli_main(['lrt', '--input', stack]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['dof'] == 5
    assert 0 <= result['p_value'] <= 1


def test_mhealy(tmp_path, stack):
    prefix = str(tmp_path / 'out' / 'mhealy')
    assert cli_main(['mhealy', '--input', stack, '--out-prefix', prefix]) == 0
    assert osp.isfile(prefix + '.csv')
    assert osp.isfile(prefix + '.svg')


def test_healy_csv_only(tmp_path, stack):
    prefix = str(tmp_path / 'healy')
    assert cli_main([
        'healy', '--input', stack, '--out-prefix', prefix, '--format', 'csv',
        '--plotting-position', 'n_plus_one'
    ]) == 0
    assert osp.isfile(prefix + '.csv')
    assert not osp.exists(prefix + '.svg')


def test_ddplot_infeasible(tmp_path, capsys):
    path = str(tmp_path / 'wide.txt')
    assert cli_main([
        'simulate', '--samples', '30', '--rows', '8', '--cols', '23',
        '--seed', '3', '--out', path
    ]) == 0
    code = cli_main(
        ['ddplot', '--input', path, '--out-prefix',
         str(tmp_path / 'dd')])
    assert code == 2
    err = capsys.readouterr().err
    assert err.startswith('matnormdiag: error:')
    info = _last_json(err)
    assert info['error'] == 'InfeasibleDiagnostic'
    assert info['reason'] == 'dimension'
    assert not osp.exists(str(tmp_path / 'dd.csv'))


def test_bad_arguments(capsys):
    assert cli_main(['lrt']) == 1
    assert cli_main(['unknown']) == 1
    assert cli_main([]) == 1


def test_parse_error(tmp_path, capsys):
    path = tmp_path / 'bad.txt'
    path.write_text('c=1,r=2,N=1\n1,nan\n')
    assert cli_main(['lrt', '--input', str(path)]) == 1
    info = _last_json(capsys.readouterr().err)
    assert info['error'] == 'NonFiniteValue'
    assert info['lineno'] == 2


def test_fit(tmp_path, stack):
    out = str(tmp_path / 'fit.json')
    assert cli_main(['fit', '--input', stack, '--out', out]) == 0
    with open(out) as f:
        info = json.load(f)
    assert info['flipflop']['converged']
    assert len(info['mvn']['mean']) == 4
    assert info['notices'] == []


def test_twophase(stack, capsys):
    assert cli_main(['twophase', '--input', stack, '--max-abs-dev',
                     '0']) == 0
    info = json.loads(capsys.readouterr().out)
    assert info['verdict'] == 'not_multivariate_normal'
    assert info['thresholds_version'] == 1


def test_propcheck(tmp_path):
    prefix = str(tmp_path / 'rates')
    assert cli_main([
        'propcheck', '--c-values', '2,3', '--n-values', '20,40', '--reps',
        '3', '--probes', '10', '--seed', '5', '--parallelism', '1',
        '--out-prefix', prefix
    ]) == 0
    assert osp.isfile(prefix + '_cells.csv')
    assert osp.isfile(prefix + '_summary.json')


def test_suite(tmp_path):
    config = tmp_path / 'suite_cfg.py'
    config.write_text(
        "scenarios = [\n"
        "    dict(name='a', generator='matnormal', n_samples=30, n_rows=2,\n"
        "         n_cols=2, seed=1),\n"
        "    dict(name='b', generator='strict_mvn', n_samples=10, n_rows=3,\n"
        "         n_cols=4, seed=2),\n"
        "]\n")
    out_dir = tmp_path / 'suite'
    assert cli_main([
        'suite', '--config',
        str(config), '--out-dir',
        str(out_dir), '--parallelism', '1', '--cfg-options', 'formats=[csv]'
    ]) == 0
    with open(out_dir / 'suite.json') as f:
        summary = json.load(f)['scenarios']
    assert [s['name'] for s in summary] == ['a', 'b']
    assert len(summary[1]['notices']) == 3
    assert osp.isfile(out_dir / 'a' / 'healy_type.csv')
    assert not osp.exists(out_dir / 'a' / 'healy_type.svg')


def test_propcheck_config(tmp_path):
    config = tmp_path / 'grid.py'
    config.write_text(
        'seed = 9\n'
        'rate_grid = dict(c_values=[2, 3], n_values=[20, 40], '
        'replications=2,\n'
        '                 probe_samples=5)\n')
    prefix = str(tmp_path / 'rates')
    assert cli_main([
        'propcheck', '--config',
        str(config), '--reps', '3', '--parallelism', '1', '--out-prefix',
        prefix
    ]) == 0
    with open(prefix + '_summary.json') as f:
        info = json.load(f)
    assert info['seed'] == 9
    assert info['grid']['replications'] == 3
    assert info['grid']['probe_samples'] == 5


def test_propcheck_needs_seed(tmp_path):
    assert cli_main(['propcheck', '--out-prefix', str(tmp_path / 'r')]) == 1


def test_repeated_calls_with_closed_stderr(tmp_path, monkeypatch):
    # a host may close the stderr a previous call logged to
    for k in range(2):
        err = io.StringIO()
        monkeypatch.setattr(sys, 'stderr', err)
        path = str(tmp_path / f'data{k}.txt')
        assert cli_main([
            '--log-level', 'INFO', 'simulate', '--samples', '5', '--rows',
            '2', '--cols', '2', '--seed', '1', '--out', path
        ]) == 0
        assert 'wrote' in err.getvalue()
        err.close()
    err = io.StringIO()
    monkeypatch.setattr(sys, 'stderr', err)
    assert cli_main(['--log-level', 'WARNING', 'fit', '--input', path,
                     '--out', str(tmp_path / 'fit.json')]) == 0
    assert 'loaded' not in err.getvalue()


def test_lrt_infeasible_row_vectors(tmp_path, capsys):
    path = str(tmp_path / 'rows.txt')
    write_matrix_stack(
        MatrixDataset(np.random.default_rng(0).standard_normal((3, 1, 5))),
        path)
    assert cli_main(['lrt', '--input', path]) == 2
    assert _last_json(capsys.readouterr().err)['error'] == \
        'InfeasibleDiagnostic'


def test_lrt_degenerate_row_vectors(tmp_path, capsys):
    path = str(tmp_path / 'rows.txt')
    write_matrix_stack(
        MatrixDataset(np.random.default_rng(0).standard_normal((30, 1, 5))),
        path)
    assert cli_main(['lrt', '--input', path]) == 1
    assert _last_json(capsys.readouterr().err)['error'] == 'DegenerateTest'


def test_infeasible_large_shape(tmp_path, capsys):
    path = str(tmp_path / 'c40.txt')
    write_matrix_stack(MatrixDataset(np.zeros((1000, 40, 40))), path)
    for command in ('healy', 'lrt'):
        argv = [command, '--input', path]
        if command == 'healy':
            argv += ['--out-prefix', str(tmp_path / 'healy')]
        assert cli_main(argv) == 2, command
        info = _last_json(capsys.readouterr().err)
        assert info['error'] == 'InfeasibleDiagnostic'
        assert info['reason'] == 'dimension'


def test_mhealy_fewer_samples_than_dim(tmp_path):
    path = str(tmp_path / 'wide.txt')
    assert cli_main([
        'simulate', '--samples', '30', '--rows', '8', '--cols', '23',
        '--seed', '3', '--out', path
    ]) == 0
    prefix = str(tmp_path / 'mhealy')
    assert cli_main(['mhealy', '--input', path, '--out-prefix', prefix]) == 0
    assert osp.isfile(prefix + '.csv')
    assert osp.isfile(prefix + '.svg')


def test_suite_independent_of_threads(tmp_path, monkeypatch):
    config = tmp_path / 'suite_cfg.py'
    config.write_text(
        "scenarios = [\n"
        "    dict(name='a', generator='matnormal', n_samples=40, n_rows=2,\n"
        "         n_cols=3, seed=1),\n"
        "    dict(name='b', generator='strict_mvn', n_samples=40, n_rows=2,\n"
        "         n_cols=2, seed=2),\n"
        "    dict(name='c', generator='matnormal', n_samples=20, n_rows=3,\n"
        "         n_cols=3, seed=3),\n"
        "]\n")
    outputs = []
    for threads in ('1', '2'):
        monkeypatch.setenv('MATNORM_DIAG_THREADS', threads)
        out_dir = tmp_path / f'suite{threads}'
        assert cli_main(
            ['suite', '--config',
             str(config), '--out-dir',
             str(out_dir)]) == 0
        files = {}
        for path in sorted(out_dir.rglob('*')):
            if path.is_file():
                files[str(path.relative_to(out_dir))] = path.read_bytes()
        outputs.append(files)
    assert sorted(outputs[0]) == sorted(outputs[1])
    assert 'a/mhealy.svg' in outputs[0]
    for name, content in outputs[0].items():
        assert content == outputs[1][name], name
