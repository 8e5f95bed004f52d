"""
Tests for the surplus-lab command line: subcommands and exit codes.

Usage:
    python tests/test_cli.py
    pytest tests/test_cli.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import json

import pytest

from lib.graph import read_edge_list
from lib.utils.errors import SpectralError
from surplus_lab import EXIT_INAPPLICABLE, EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, main


def generate(tmp_path, name, *spec):
    path = tmp_path / f"{name}.el"
    assert main(['generate', *spec, '--output', str(path)]) == EXIT_OK
    return str(path)


def test_generate_writes_edge_list(tmp_path):
    path = generate(tmp_path, 'paley13', 'paley', '13')
    g, labels = read_edge_list(path)
    assert (g.n, g.m) == (13, 39)
    assert labels[0] == '0'
    text = open(path, encoding='utf-8').read()
    assert '# generator: paley 13' in text


def test_generate_is_reproducible(tmp_path):
    first = generate(tmp_path, 'first', 'gnp', '20', '0.3')
    second = generate(tmp_path, 'second', 'gnp', '20', '0.3')
    assert open(first, 'rb').read() == open(second, 'rb').read()


def test_generate_to_stdout(capsys):
    assert main(['generate', 'cycle', '4']) == EXIT_OK
    out = capsys.readouterr().out
    assert '0 1' in out and '# n: 4' in out


def test_cut_with_oracle(tmp_path, capsys):
    path = generate(tmp_path, 'k5', 'complete', '5')
    capsys.readouterr()
    assert main(['cut', path, 'oracle', '--labels']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'crossing: 6' in out
    assert 'surplus: 1 ' in out
    assert 'labels: 0 1 2 3 4' in out


def test_cut_accepts_options_after_the_subcommand(tmp_path, capsys):
    path = generate(tmp_path, 'paley13', 'paley', '13')
    capsys.readouterr()
    assert main(['cut', path, 'hyperplane-srg', '--trials', '50', '--seed', '3']) == EXIT_OK
    out = capsys.readouterr().out
    surplus = next(line for line in out.splitlines() if line.startswith('surplus: '))
    assert float(surplus.split('(')[1].rstrip(')')) > 0
    assert 'eigenvalue bound: ' in out


def test_options_before_and_after_the_subcommand_agree(tmp_path, capsys):
    path = generate(tmp_path, 'petersen', 'petersen')
    capsys.readouterr()
    assert main(['--seed', '7', '--trials', '5', 'cut', path, 'local-search']) == EXIT_OK
    before = capsys.readouterr().out
    assert main(['cut', path, 'local-search', '--seed', '7', '--trials', '5']) == EXIT_OK
    assert capsys.readouterr().out == before


def test_trailing_trials_are_validated(tmp_path):
    path = generate(tmp_path, 'c5', 'cycle', '5')
    assert main(['cut', path, 'oracle', '--trials', '0']) == EXIT_USAGE


def test_numeric_failure_exits_4(tmp_path, monkeypatch):
    import lib.spectral

    def diverge(g, seed=0):
        raise SpectralError("power iteration did not converge")

    path = generate(tmp_path, 'k5', 'complete', '5')
    monkeypatch.setattr(lib.spectral, 'eigenvalue_upper_bound', diverge)
    assert main(['cut', path, 'oracle']) == EXIT_INVARIANT


def test_oracle_command(tmp_path, capsys):
    path = generate(tmp_path, 'c5', 'cycle', '5')
    capsys.readouterr()
    assert main(['oracle', path]) == EXIT_OK
    out = capsys.readouterr().out
    assert 'mc: 4' in out
    assert 'method: ' in out


def test_profile_command(tmp_path, capsys):
    path = generate(tmp_path, 'petersen', 'petersen')
    capsys.readouterr()
    assert main(['--seed', '1', 'profile', path, '--r', '5']) == EXIT_OK
    dump = json.loads(capsys.readouterr().out)
    assert dump['q'] == 2
    assert sum(dump['layer_sizes']) == 10


def test_inapplicable_algorithm_exits_3(tmp_path):
    path = generate(tmp_path, 'c6', 'cycle', '6')
    assert main(['cut', path, 'hyperplane-srg']) == EXIT_INAPPLICABLE


def test_malformed_edge_list_exits_2(tmp_path, capsys):
    path = tmp_path / 'bad.el'
    path.write_text('0 1\n1 2 3\n', encoding='utf-8')
    assert main(['cut', str(path), 'oracle']) == EXIT_USAGE
    assert 'line 2' in capsys.readouterr().err


@pytest.mark.parametrize('argv', [
    ['verify', 'nonsense'],
    ['generate', 'hypercube', '3'],
    ['--trials', '0', 'verify', 'core'],
    ['cut', 'missing.el', 'oracle'],
    [],
])
def test_usage_errors_exit_2(argv):
    assert main(argv) == EXIT_USAGE


def test_unknown_algorithm_exits_2(tmp_path):
    path = generate(tmp_path, 'c4', 'cycle', '4')
    assert main(['cut', path, 'simulated-annealing']) == EXIT_USAGE


def test_verify_spectral_suite(capsys):
    assert main(['verify', 'spectral']) == EXIT_OK
    assert '✅ spectral' in capsys.readouterr().out


def test_sweep_command(tmp_path):
    spec = tmp_path / 'sweep.json'
    output = tmp_path / 'out.csv'
    spec.write_text(json.dumps({
        'trials': 4,
        'graphs': ['cycle 5', 'petersen'],
        'algorithms': ['local-search', 'oracle'],
    }), encoding='utf-8')
    assert main(['sweep', str(spec), '--output', str(output)]) == EXIT_OK
    lines = output.read_text(encoding='utf-8').splitlines()
    assert lines[0].startswith('graph_id,n,m,')
    assert len(lines) == 5


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
