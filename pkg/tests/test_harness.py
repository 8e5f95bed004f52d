"""
Tests for the algorithm registry, CSV sweeps and the invariant suites.

Usage:
    python tests/test_harness.py
    pytest tests/test_harness.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from fractions import Fraction

import pytest

from lib.generators import complete, cycle, paley, petersen
from lib.graph import Graph
from lib.harness import (
    COLUMNS,
    SUITES,
    TIMING_COLUMN,
    Failure,
    SuiteReport,
    SweepSpec,
    describe_failure,
    format_csv,
    format_number,
    get_algorithm,
    run_suite,
    run_sweep,
    write_csv,
)
from lib.harness import verify
from lib.utils.errors import ConfigError, InapplicableAlgorithmError, ParameterError

SMALL_CORPUS = [
    ('cycle 5', cycle(5)),
    ('complete 4', complete(4)),
    ('petersen', petersen()),
    ('paley 13', paley(13)),
]
GENERAL_ALGORITHMS = [
    'hyperplane-regular', 'hyperplane-srg', 'hyperplane-signed', 'c5-bucket',
    'triangle-sampling', 'bucket-sampling', 'codegree-trim', 'local-search', 'oracle',
]


# Registry

def test_oracle_algorithm_report():
    report = get_algorithm('oracle').run(complete(5), seed=0, trials=1)
    assert report.crossing == 6
    assert report.surplus == 1
    assert (report.target_name, report.target_value) == ('mc', 6.0)


def test_algorithms_report_a_consistent_surplus():
    g = paley(13)
    for name in GENERAL_ALGORITHMS:
        try:
            report = get_algorithm(name).run(g, seed=1, trials=4)
        except InapplicableAlgorithmError:
            continue
        report.cut.validate()
        assert 2 * report.surplus == 2 * report.crossing - g.m, name


def test_unknown_algorithm():
    with pytest.raises(ParameterError, match='unknown algorithm'):
        get_algorithm('simulated-annealing')


@pytest.mark.parametrize('name, g, r', [
    ('hyperplane-srg', cycle(6), None),
    ('kr-recursive', complete(4), 4),
    ('codegree-trim', Graph.from_edges(3, [(0, 1), (1, 2)]), None),
    ('odd-cycle-st', petersen(), 4),
])
def test_inapplicable_algorithms(name, g, r):
    with pytest.raises(InapplicableAlgorithmError):
        get_algorithm(name).run(g, seed=0, trials=2, r=r)


# Sweeps

def make_spec(**overrides):
    data = {
        'seed': 0,
        'trials': 4,
        'graphs': ['paley 13', 'cycle 6'],
        'algorithms': ['oracle', 'hyperplane-srg'],
    }
    data.update(overrides)
    return SweepSpec.from_dict(data)


def test_sweep_rows_are_graph_major_with_skips():
    rows = run_sweep(make_spec())
    assert [(row['graph_id'], row['algorithm']) for row in rows] == [
        ('paley 13', 'oracle'), ('paley 13', 'hyperplane-srg'),
        ('cycle 6', 'oracle'), ('cycle 6', 'hyperplane-srg'),
    ]
    assert [row['status'] for row in rows] == ['ok', 'ok', 'ok', 'skipped']
    assert rows[2]['crossing'] == '6'
    assert 'strongly regular' in rows[3]['note']


def test_sweep_reruns_are_byte_identical(tmp_path):
    spec = make_spec()
    first = write_csv(spec, run_sweep(spec), str(tmp_path / 'first.csv'))
    second = write_csv(spec, run_sweep(spec), str(tmp_path / 'second.csv'))
    assert first == second
    assert (tmp_path / 'first.csv').read_bytes() == (tmp_path / 'second.csv').read_bytes()
    assert TIMING_COLUMN not in first


def test_empty_sweep_writes_header_only():
    spec = make_spec(graphs=[])
    assert format_csv(spec, run_sweep(spec)) == ','.join(COLUMNS) + '\r\n'


def test_timing_column_is_opt_in():
    spec = make_spec(graphs=['cycle 5'], algorithms=['local-search'], timing=True)
    rows = run_sweep(spec)
    assert spec.columns[-1] == TIMING_COLUMN
    assert float(rows[0][TIMING_COLUMN]) >= 0


@pytest.mark.parametrize('data', [
    [],
    {'graphs': 'paley 13'},
    {'algorithms': [1, 2]},
    {'trials': 0},
    {'seed': 'abc'},
])
def test_sweep_spec_errors(data):
    with pytest.raises(ConfigError):
        SweepSpec.from_dict(data)


def test_sweep_spec_load_rejects_bad_json(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{"graphs": [', encoding='utf-8')
    with pytest.raises(ConfigError):
        SweepSpec.load(str(path))


@pytest.mark.parametrize('value, text', [
    (None, ''),
    (True, 'true'),
    (3, '3'),
    (Fraction(4, 2), '2'),
    (Fraction(1, 2), '0.5'),
    (1 / 3, '0.3333333333'),
])
def test_format_number(value, text):
    assert format_number(value) == text


# Invariant suites

def test_core_suite_passes_on_corpus():
    reports = run_suite('core')
    assert [report.suite for report in reports] == ['core']
    assert reports[0].passed, [f.message for f in reports[0].failures]
    assert reports[0].checks > 0


@pytest.mark.parametrize('suite', ['vectors', 'structure', 'sampling', 'spectral'])
def test_suites_pass_on_small_graphs(suite):
    (report,) = run_suite(suite, graphs=SMALL_CORPUS)
    assert report.passed, [f.message for f in report.failures]


@pytest.mark.parametrize('suite, names', [
    ('vectors', {'st_decomposition', 'inner_products', 'srg_negative', 'signed_identity', 'c5_intersections'}),
    ('structure', {'regularize', 'bucket_sums', 'good_path_profile'}),
    ('sampling', {'triangle_sampling_chain', 'bucket_sampling_chain', 'sparse_set', 'codegree_trimming'}),
])
def test_suites_run_every_check(suite, names, monkeypatch):
    seen = set()
    original = verify._record

    def record(report, check, label, g, func):
        seen.add(check)
        original(report, check, label, g, func)

    monkeypatch.setattr(verify, '_record', record)
    run_suite(suite, graphs=SMALL_CORPUS)
    assert names <= seen


def test_all_runs_every_suite():
    reports = run_suite('all', graphs=SMALL_CORPUS[:2])
    assert tuple(report.suite for report in reports) == SUITES


def test_unknown_suite():
    with pytest.raises(ParameterError):
        run_suite('nonsense')


def test_minimal_failure_and_description():
    report = SuiteReport('core', checks=2, failures=[
        Failure('handshake', 'petersen', petersen(), 'boom'),
        Failure('handshake', 'cycle 3', cycle(3), 'bang'),
    ])
    assert not report.passed
    smallest = report.minimal_failure()
    assert smallest.label == 'cycle 3'
    text = describe_failure(smallest)
    assert text.startswith('handshake on cycle 3: bang\n')
    assert 'failing instance: cycle 3' in text
    assert SuiteReport('core').minimal_failure() is None


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
