"""Algorithm registry, CSV sweeps and invariant suites."""

from .registry import Algorithm, AlgorithmReport, ALGORITHMS, get_algorithm
from .sweep import COLUMNS, TIMING_COLUMN, SweepSpec, format_number, run_sweep, format_csv, write_csv
from .verify import SUITES, Failure, SuiteReport, corpus, run_suite, describe_failure

__all__ = [
    'Algorithm',
    'AlgorithmReport',
    'ALGORITHMS',
    'get_algorithm',
    'COLUMNS',
    'TIMING_COLUMN',
    'SweepSpec',
    'format_number',
    'run_sweep',
    'format_csv',
    'write_csv',
    'SUITES',
    'Failure',
    'SuiteReport',
    'corpus',
    'run_suite',
    'describe_failure',
]
