"""
CSV sweeps over (graph, algorithm) pairs.

A sweep spec is a JSON file:

    {
        "seed": 0,
        "trials": 64,
        "graphs": ["paley 13", "gnp 20 0.3"],
        "algorithms": ["local-search", "oracle"],
        "output": "results.csv",
        "timing": false
    }

Rows are computed in parallel and written in spec order, graph-major.
Inapplicable algorithms produce a skip row. wall_time_s is only written when
timing is on, so reruns of the same spec give byte-identical files.
"""

import csv
import io
import json
import logging
import time
from dataclasses import dataclass

from lib.generators import GeneratorSpec
from lib.graph import edwards_bound, shearer_raw, triangle_count, triangle_surplus
from lib.spectral import eigenvalue_upper_bound
from lib.utils.errors import ConfigError, InapplicableAlgorithmError, InvariantViolation, SpectralError
from lib.utils.parallel import ordered_map
from lib.utils.seeding import STREAM_NAME
from lib.utils.settings import get_settings

from .registry import get_algorithm

log = logging.getLogger(__name__)

COLUMNS = [
    'graph_id', 'n', 'm', 'd', 'triangles', 'triangle_surplus',
    'algorithm', 'status', 'crossing', 'surplus',
    'edwards', 'shearer_raw', 'eigenvalue_ub',
    'target_name', 'target_value', 'note',
]
TIMING_COLUMN = 'wall_time_s'


@dataclass(frozen=True)
class SweepSpec:
    seed: int
    trials: int
    graphs: tuple
    algorithms: tuple
    output: str | None = None
    timing: bool = False
    r: int | None = None

    @classmethod
    def from_dict(cls, data):
        """
        Raises:
            ConfigError: Missing or mistyped fields
        """
        if not isinstance(data, dict):
            raise ConfigError("sweep spec must be a JSON object")
        graphs = data.get('graphs', [])
        algorithms = data.get('algorithms', [])
        if not isinstance(graphs, list) or not all(isinstance(g, str) for g in graphs):
            raise ConfigError("'graphs' must be a list of generator spec strings")
        if not isinstance(algorithms, list) or not all(isinstance(a, str) for a in algorithms):
            raise ConfigError("'algorithms' must be a list of algorithm names")
        settings = get_settings()
        try:
            seed = int(data.get('seed', settings.seed))
            trials = int(data.get('trials', settings.trials))
            r = data.get('r')
            r = int(r) if r is not None else None
        except (TypeError, ValueError) as error:
            raise ConfigError(f"invalid sweep number: {error}") from None
        if trials < 1:
            raise ConfigError(f"'trials' must be ≥ 1, got {trials}")
        return cls(seed, trials, tuple(graphs), tuple(algorithms),
                   data.get('output'), bool(data.get('timing', False)), r)

    @classmethod
    def load(cls, path):
        try:
            with open(path, encoding='utf-8') as handle:
                data = json.load(handle)
        except json.JSONDecodeError as error:
            raise ConfigError(f"{path}: invalid JSON ({error})") from None
        return cls.from_dict(data)

    @property
    def columns(self):
        return COLUMNS + [TIMING_COLUMN] if self.timing else list(COLUMNS)


def format_number(value):
    """Locale-free text for CSV cells: ints as is, halves exact, floats with 10 significant digits."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if hasattr(value, 'denominator'):
        if value.denominator == 1:
            return str(value.numerator)
        return repr(float(value))
    return f"{value:.10g}"


def graph_columns(label, g):
    """Per-graph columns shared by every algorithm row."""
    try:
        upper = eigenvalue_upper_bound(g) if g.m else None
    except SpectralError as error:
        log.warning("sweep eigenvalue bound failed graph=%s error=%s", label, error)
        upper = None
    return {
        'graph_id': label,
        'n': format_number(g.n),
        'm': format_number(g.m),
        'd': format_number(float(g.average_degree)),
        'triangles': format_number(triangle_count(g)),
        'triangle_surplus': format_number(triangle_surplus(g)),
        'edwards': format_number(edwards_bound(g.m)),
        'shearer_raw': format_number(shearer_raw(g)),
        'eigenvalue_ub': format_number(upper),
    }


def run_row(g, base, algorithm_name, seed, trials, r=None, timing=False):
    """One SweepRow as a dict of CSV cells."""
    row = dict(base)
    row['algorithm'] = algorithm_name
    start = time.perf_counter()
    try:
        report = get_algorithm(algorithm_name).run(g, seed=seed, trials=trials, r=r)
    except InapplicableAlgorithmError as error:
        row.update(status='skipped', crossing='', surplus='', target_name='', target_value='',
                   note=str(error))
    else:
        if report.surplus * 2 != 2 * report.crossing - g.m:
            raise InvariantViolation(f"{algorithm_name}: surplus {report.surplus} differs from crossing - m/2")
        row.update(
            status='ok',
            crossing=format_number(report.crossing),
            surplus=format_number(report.surplus),
            target_name=report.target_name,
            target_value=format_number(report.target_value),
            note=report.note,
        )
    if timing:
        row[TIMING_COLUMN] = f"{time.perf_counter() - start:.6f}"
    return row


def run_sweep(spec):
    """
    Compute every row of a sweep.

    Returns:
        list: Row dicts in spec order
    """
    graphs = []
    for text in spec.graphs:
        generator = GeneratorSpec.parse(text, spec.seed)
        graphs.append((generator.label, generator.build()))
    bases = ordered_map(lambda item: graph_columns(*item), graphs)
    jobs = [(g, base, name) for (_, g), base in zip(graphs, bases) for name in spec.algorithms]
    for name in spec.algorithms:
        get_algorithm(name)
    rows = ordered_map(
        lambda job: run_row(job[0], job[1], job[2], spec.seed, spec.trials, spec.r, spec.timing),
        jobs,
    )
    log.info("sweep graphs=%d algorithms=%d rows=%d stream=%s",
             len(graphs), len(spec.algorithms), len(rows), STREAM_NAME)
    return rows


def format_csv(spec, rows):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=spec.columns, lineterminator='\r\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def write_csv(spec, rows, path=None):
    """Write rows to path (or the spec's output); returns the CSV text."""
    text = format_csv(spec, rows)
    target = path or spec.output
    if target:
        with open(target, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
    return text
