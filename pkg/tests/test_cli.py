import json
import os
import shutil
import subprocess
import sys

import pytest

from core import cli as cli_module
from core import verify
from core.cli import cli
from core.env import coinvkit_root

EXAMPLE_Y = 'y{5}^3*y{2,5}^2*y{1,2,3,5}^2'


def run(runner, *args):
    return runner.invoke(cli, list(args))


def as_json(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


@pytest.mark.parametrize('args,count', [
    (['--osp', '-n', '3', '-k', '2'], 6),
    (['--words', '-n', '2', '-r', '2'], 8),
    (['--faces', '-n', '2', '-k', '2'], 2),
])
def test_enumerate_counts(runner, args, count):
    payload = as_json(run(runner, 'enumerate', *args, '--format', 'json'))
    assert payload['count'] == count
    assert len(payload['rows']) == count


def test_enumerate_csv(runner):
    result = run(runner, 'enumerate', '-n', '3', '-k', '2', '--format', 'csv')
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == 'osp,blocks,des,maj,comaj'
    assert len(lines) == 7


def test_enumerate_text_table(runner):
    result = run(runner, 'enumerate', '-n', '2', '-k', '2')
    assert result.exit_code == 0
    assert '2 rows' in result.output


def test_hilbert_text(runner):
    result = run(runner, 'hilbert', '-n', '3', '-k', '3', '--variant', 'S')
    assert result.exit_code == 0
    assert result.stdout.strip() == '1,2,2,1'


def test_hilbert_oracle_json(runner):
    payload = as_json(run(runner, 'hilbert', '-n', '3', '-k', '3', '--source', 'oracle',
                          '--setting', 'x', '--format', 'json'))
    assert payload['coefficients'] == [1, 2, 2, 1]
    assert payload['total'] == 6


def test_rewrite_json(runner):
    payload = as_json(run(runner, 'rewrite', '-n', '5', '-k', '4', '-r', '2',
                          '-m', EXAMPLE_Y, '--format', 'json'))
    assert len(payload['steps']) == 2
    assert payload['admissibility'] == 'admissible'
    assert payload['normal_form'].startswith('-y{1,2,4,5}^2*y{2,5}^2*y{5}^3')


def test_rewrite_x_side(runner):
    payload = as_json(run(runner, 'rewrite', '-n', '5', '-k', '4', '-r', '2',
                          '-m', 'x5^7*x2^4*x1^2*x3^2', '--format', 'json'))
    assert payload['same_mu'] == '-x5^7*x2^4*x1^2*x4^2 + x5^7*x3^4*x2^2*x4^2 + x5^7*x4^4*x2^2*x3^2'
    assert payload['mu'] == [4, 4, 2, 2, 1, 1, 1]


def test_rewrite_text_panel(runner):
    result = run(runner, 'rewrite', '-n', '5', '-k', '4', '-r', '2', '-m', EXAMPLE_Y)
    assert result.exit_code == 0
    assert '≡' in result.output


def test_stats_word(runner):
    payload = as_json(run(runner, 'stats', '-n', '5', '-r', '4', '--word', '3^3 1^1 5^2 2^2 4^0',
                          '--format', 'json'))
    assert payload['stats']['maj'] == 28
    assert payload['stats']['descents'] == [2, 3]


def test_stats_osp(runner):
    payload = as_json(run(runner, 'stats', '-n', '9', '-k', '5', '-r', '4',
                          '--osp', '(4^3 2^2 3^2 9^1 6^1 1^0 5^2 7^2 8^1; 3,2)', '--format', 'json'))
    assert payload['stats']['comaj'] == 74
    assert payload['stats']['b'] == 'x4^19*x2^18*x3^14*x9^9*x6^5*x1^4*x5^2*x7^2*x8'


def test_stats_blocks_and_face(runner):
    payload = as_json(run(runner, 'stats', '-n', '7', '-k', '4', '--blocks', '24|6|1|357',
                          '--format', 'json'))
    assert payload['stats']['comaj'] == 5
    assert payload['stats']['hrs_maj'] == 10
    payload = as_json(run(runner, 'stats', '-n', '7', '-k', '3', '-r', '3',
                          '--face', '({1,4}; 5^2 2^1 3^1 7^2 6^0; 2)', '--format', 'json'))
    assert payload['stats']['comaj'] == 39


def test_basis(runner):
    payload = as_json(run(runner, 'basis', '-n', '3', '-k', '2', '--format', 'json'))
    assert payload['count'] == 6
    payload = as_json(run(runner, 'basis', '-n', '2', '-k', '2', '--check', '--format', 'json'))
    assert payload['certification']['passed']


def test_frobenius(runner):
    payload = as_json(run(runner, 'frobenius', '-n', '3', '-k', '3', '--format', 'json'))
    assert payload['basis'] == 'schur'
    assert {'partition': [2, 1], 'poly': [0, 1, 1]} in payload['terms']
    payload = as_json(run(runner, 'frobenius', '-n', '3', '-k', '2', '--multigraded', '--format', 'json'))
    assert payload['terms'][0]['t_monomial'] == '1'


def test_verify(runner):
    payload = as_json(run(runner, 'verify', '-n', '3', '-k', '2', '--check', 'worked-statistics',
                          '--check', 'comaj-hrs', '--format', 'json'))
    assert payload['passed']
    assert [c['name'] for c in payload['checks']] == ['worked-statistics', 'comaj-hrs']


def test_version(runner):
    result = run(runner, 'version')
    assert result.exit_code == 0
    assert 'coinvkit 0.1.0' in result.output


def test_output_file(runner, tmp_path):
    target = tmp_path / 'nested' / 'hilbert.json'
    result = run(runner, 'hilbert', '-n', '3', '-k', '2', '--format', 'json', '-o', str(target))
    assert result.exit_code == 0
    assert json.loads(target.read_text())['total'] == 6


@pytest.mark.skipif(shutil.which('bash') is None, reason='launcher needs bash')
def test_launcher_writes_relative_output_in_caller_directory(tmp_path):
    env = {**os.environ, 'COINVKIT_BASE_PATH': str(coinvkit_root), 'COINVKIT_PYTHON': sys.executable}
    launcher = coinvkit_root / 'bin' / 'coinvkit'
    completed = subprocess.run(
        ['bash', str(launcher), 'hilbert', '-n', '3', '-k', '2', '--format', 'json', '-o', 'out.json'],
        cwd=tmp_path, env=env, capture_output=True, text=True, timeout=120)
    assert completed.returncode == 0, completed.stderr
    assert json.loads((tmp_path / 'out.json').read_text())['total'] == 6


@pytest.mark.parametrize('args', [
    ['stats', '-n', '2', '-r', '2', '--word', '1^5 2^0'],
    ['stats', '-n', '3', '--word', '1 2 3', '--osp', '(1 2 3; )'],
    ['enumerate', '-n', '3', '--bogus'],
    ['enumerate', '-n', '0'],
    ['hilbert', '-n', '3', '-k', '4'],
    ['frobenius', '-n', '3', '-r', '2'],
    ['verify', '-n', '3'],
    ['verify', '-n', '3', '--check', 'no-such-check'],
])
def test_usage_errors_exit_one(runner, args):
    assert run(runner, *args).exit_code == 1


def test_resource_cap_exits_two(runner):
    result = run(runner, 'hilbert', '-n', '3', '-k', '3', '--source', 'oracle', '--setting', 'x',
                 '--cap-slice', '1')
    assert result.exit_code == 2


def test_verify_resource_cap_exits_two(runner):
    result = run(runner, 'verify', '-n', '3', '-k', '3', '--check', 'hilbert-agreement',
                 '--cap-degree', '1')
    assert result.exit_code == 2
    assert 'ResourceLimitError' not in result.stdout


def test_failing_check_exits_three(runner, monkeypatch):
    monkeypatch.setitem(verify._REGISTRY, 'always-fails',
                        lambda run_ctx, out: out.expect(False, 'broken'))
    monkeypatch.setattr(cli_module, 'available_checks', lambda: ['always-fails'])
    result = run(runner, 'verify', '-n', '3', '--check', 'always-fails')
    assert result.exit_code == 3
