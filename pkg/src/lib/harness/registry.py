"""
Named cut algorithms with their applicability checks.

Each entry validates its preconditions first and raises
InapplicableAlgorithmError naming the one that failed, so sweeps can emit a
skip row and the CLI can exit with status 3.

Usage:
    from lib.harness import get_algorithm

    algorithm = get_algorithm('hyperplane-srg')
    algorithm.check(g)
    report = algorithm.run(g, seed=0, trials=1000)
"""

import logging
from dataclasses import dataclass, field

from lib.graph import clique_count, theorem_targets, triangle_surplus
from lib.oracle import EXACT_MAX_VERTICES, local_search, max_cut_exact
from lib.rounding import augment_with_identity, hyperplane_round
from lib.sampling import (
    bucket_neighborhood_cut,
    codegree_trimming_cut,
    composite_kr_cut,
    kr_recursive_cut,
    odd_cycle_pipeline_cut,
    triangle_sampling_cut,
)
from lib.structure import dyadic_codegree_bucket, good_path_profile, st_sets
from lib.utils.errors import InapplicableAlgorithmError, ParameterError
from lib.utils.settings import get_settings
from lib.vectors import (
    RegularVectorParams,
    SrgParams,
    arcsin_gap,
    c5_bucket_sets,
    c5_bucket_vectors,
    gamma_for_triangle_surplus,
    odd_cycle_st_vectors,
    regular_vectors,
    signed_gap_bound,
    signed_vectors,
    srg_gamma,
)
from lib.vectors.params import MAX_DENSITY

log = logging.getLogger(__name__)

SIGNED_GAMMA = 0.1


@dataclass(frozen=True)
class AlgorithmReport:
    """
    Attributes:
        cut: Cut of the input graph
        target_name: Name of the self-reported guarantee
        target_value: Its value (None when there is none)
        note: Statistics such as (X, Y, Z) or the analytic expectation
    """

    cut: object
    target_name: str = ''
    target_value: float | None = None
    note: str = ''

    @property
    def crossing(self):
        return self.cut.crossing

    @property
    def surplus(self):
        return self.cut.surplus


@dataclass(frozen=True)
class Algorithm:
    name: str
    description: str
    runner: object = field(repr=False)
    checks: tuple = field(default=(), repr=False)
    default_r: int | None = None

    def check(self, g, r=None):
        """Raise InapplicableAlgorithmError on the first failing precondition."""
        for check in self.checks:
            check(g, r or self.default_r)

    def run(self, g, seed=0, trials=None, r=None):
        self.check(g, r)
        trials = trials or get_settings().trials
        try:
            return self.runner(g, seed, trials, r or self.default_r)
        except ParameterError as error:
            raise InapplicableAlgorithmError(f"{self.name}: {error}") from error


# Preconditions

def _has_edges(g, r):
    if g.m == 0:
        raise InapplicableAlgorithmError("graph has no edges")


def _regular(g, r):
    if not g.is_regular() or g.max_degree < 1:
        raise InapplicableAlgorithmError("graph is not regular with d ≥ 1")


def _not_dense(g, r):
    if g.max_degree > MAX_DENSITY * g.n:
        raise InapplicableAlgorithmError(f"d = {g.max_degree} exceeds 0.99·n")


def _half_dense(g, r):
    if 2 * g.max_degree > g.n:
        raise InapplicableAlgorithmError(f"d = {g.max_degree} exceeds n/2")


def _strongly_regular(g, r):
    try:
        SrgParams.from_graph(g)
    except ParameterError as error:
        raise InapplicableAlgorithmError(f"graph is not strongly regular: {error}") from None


def _average_degree(g, r):
    if g.average_degree < 1:
        raise InapplicableAlgorithmError(f"average degree {float(g.average_degree):.4g} < 1")


def _two_paths(g, r):
    if all(degree < 2 for degree in g.degrees):
        raise InapplicableAlgorithmError("graph has no path of length 2")


def _clique_free(g, r):
    if r < 3:
        raise InapplicableAlgorithmError(f"r ≥ 3 required, got {r}")
    if clique_count(g, r) > 0:
        raise InapplicableAlgorithmError(f"graph contains K_{r}")


def _odd_length(g, r):
    if r < 3 or r % 2 == 0:
        raise InapplicableAlgorithmError(f"odd r ≥ 3 required, got {r}")


def _odd_profile_length(g, r):
    if r < 5 or r % 2 == 0:
        raise InapplicableAlgorithmError(f"odd r ≥ 5 required, got {r}")


def _oracle_size(g, r):
    limit = min(get_settings().oracle_max_vertices, EXACT_MAX_VERTICES)
    if g.n > limit:
        raise InapplicableAlgorithmError(f"n = {g.n} above the oracle limit {limit}")


# Runners

def _rounding_report(g, outcome, target_name='', target_value=None):
    note = (f"analytic_expectation={outcome.analytic_expectation:.6f} "
            f"mean_crossing={outcome.mean_crossing:.6f}")
    return AlgorithmReport(outcome.cut, target_name, target_value, note)


def _run_hyperplane_regular(g, seed, trials, r):
    choice = gamma_for_triangle_surplus(g.n, g.max_degree, triangle_surplus(g))
    params = RegularVectorParams.for_graph(g, choice.gamma)
    outcome = hyperplane_round(g, regular_vectors(g, params), seed, trials)
    return _rounding_report(g, outcome, 'regular_triangle_dependence',
                            theorem_targets(g)['regular_triangle_dependence'])


def _run_hyperplane_srg(g, seed, trials, r):
    choice = srg_gamma(SrgParams.from_graph(g))
    params = RegularVectorParams.for_graph(g, choice.gamma)
    outcome = hyperplane_round(g, regular_vectors(g, params), seed, trials)
    report = _rounding_report(g, outcome, 'regular_triangle_dependence',
                              theorem_targets(g)['regular_triangle_dependence'])
    return AlgorithmReport(report.cut, report.target_name, report.target_value,
                           f"{report.note} regime={choice.regime} gamma={choice.gamma:.3g}")


def _run_hyperplane_signed(g, seed, trials, r):
    params = RegularVectorParams.for_graph(g, SIGNED_GAMMA)
    signed = signed_vectors(g, params, seed)
    outcome = hyperplane_round(g, signed, seed, trials)
    report = _rounding_report(g, outcome, 'regular_triangle_dependence',
                              theorem_targets(g)['regular_triangle_dependence'])
    gap = arcsin_gap(g, regular_vectors(g, params), signed)
    return AlgorithmReport(report.cut, report.target_name, report.target_value,
                           f"{report.note} arcsin_gap={gap:.6g} gap_bound={signed_gap_bound(g, params):.6g}")


def _run_c5_bucket(g, seed, trials, r):
    bucket = dyadic_codegree_bucket(g)
    outcome = hyperplane_round(g, c5_bucket_vectors(g, bucket.s), seed, trials)
    return _rounding_report(g, outcome, 'odd_cycle_c5', theorem_targets(g)['odd_cycle_c5'])


def _run_odd_cycle_st(g, seed, trials, r):
    prof = good_path_profile(g, r, seed=seed)
    vectors = augment_with_identity(g, odd_cycle_st_vectors(g, st_sets(prof, prof.q)))
    outcome = hyperplane_round(g, vectors, seed, trials)
    return _rounding_report(g, outcome, f"odd_cycle_c{r}", g.m ** ((r + 1) / (r + 2)))


def _sampling_report(result, target_name, target_value):
    x, y, z = result.xyz
    note = f"X={x} Y={y} Z={z} k={result.plan.k} p={result.plan.p:.6g} mean_gain={result.mean_gain:.6f}"
    return AlgorithmReport(result.cut, target_name, target_value, note)


def _run_triangle_sampling(g, seed, trials, r):
    result = triangle_sampling_cut(g, seed=seed, trials=trials)
    return _sampling_report(result, 'few_triangles', theorem_targets(g)['few_triangles'])


def _run_bucket_sampling(g, seed, trials, r):
    bucket = dyadic_codegree_bucket(g)
    result = bucket_neighborhood_cut(g, c5_bucket_sets(g, bucket.s), seed=seed, trials=trials)
    return _sampling_report(result, 'odd_cycle_c5', theorem_targets(g)['odd_cycle_c5'])


def _run_codegree_trim(g, seed, trials, r):
    result = codegree_trimming_cut(g, seed=seed, trials=trials)
    if result.fallback:
        return AlgorithmReport(result.cut, 'sparse_set', None, f"fallback={result.tag}")
    note = (f"level={result.params.level} w={result.w} |S|={result.S.bit_count()} "
            f"inequality={result.inequality_holds}")
    return AlgorithmReport(result.cut, 'sparse_set', float(result.target), note)


def _run_kr_recursive(g, seed, trials, r):
    result = kr_recursive_cut(g, r, seed=seed, trials=trials)
    return AlgorithmReport(result.cut, f"clique_k{r}", g.m ** (0.5 + 3 / (4 * r - 2)),
                           f"branch={result.branch} depth={result.depth}")


def _run_composite_kr(g, seed, trials, r):
    result = composite_kr_cut(g, r, seed=seed, trials=trials)
    return AlgorithmReport(result.cut, f"clique_k{r}", g.m ** (0.5 + 3 / (4 * r - 2)),
                           f"branch={result.branch}")


def _run_odd_cycle_pipeline(g, seed, trials, r):
    result = odd_cycle_pipeline_cut(g, r, seed=seed, trials=trials)
    skipped = ','.join(sorted(result.skipped)) or '-'
    return AlgorithmReport(result.cut, f"odd_cycle_c{r}", g.m ** ((r + 1) / (r + 2)),
                           f"branch={result.branch} skipped={skipped}")


def _run_local_search(g, seed, trials, r):
    result = local_search(g, seed, restarts=trials)
    return AlgorithmReport(result.witness, 'edwards', None, result.method)


def _run_oracle(g, seed, trials, r):
    result = max_cut_exact(g)
    return AlgorithmReport(result.witness, 'mc', float(result.mc), result.method)


ALGORITHMS = {
    algorithm.name: algorithm
    for algorithm in (
        Algorithm('hyperplane-regular', 'regular-graph vectors, γ by triangle surplus',
                  _run_hyperplane_regular, (_has_edges, _regular, _not_dense)),
        Algorithm('hyperplane-srg', 'regular-graph vectors on strongly regular graphs',
                  _run_hyperplane_srg, (_has_edges, _regular, _not_dense, _strongly_regular)),
        Algorithm('hyperplane-signed', 'randomly signed high-codegree coordinates',
                  _run_hyperplane_signed, (_has_edges, _regular, _half_dense)),
        Algorithm('c5-bucket', 'dyadic codegree-bucket vectors',
                  _run_c5_bucket, (_has_edges, _regular, _two_paths)),
        Algorithm('odd-cycle-st', 'S/T vectors of a good-path profile',
                  _run_odd_cycle_st, (_has_edges, _odd_profile_length), default_r=5),
        Algorithm('triangle-sampling', 'exclusive-neighbourhood label sampling',
                  _run_triangle_sampling, (_has_edges, _average_degree)),
        Algorithm('bucket-sampling', 'label sampling over codegree buckets',
                  _run_bucket_sampling, (_has_edges, _regular, _two_paths)),
        Algorithm('codegree-trim', 'auxiliary-graph trimming and sparse-set cut',
                  _run_codegree_trim, (_has_edges, _regular)),
        Algorithm('kr-recursive', 'recursive exclusive neighbourhoods for K_r-free graphs',
                  _run_kr_recursive, (_clique_free,), default_r=4),
        Algorithm('composite-kr', 'degenerate / min-degree dispatch for K_r-free graphs',
                  _run_composite_kr, (_clique_free,), default_r=3),
        Algorithm('odd-cycle-pipeline', 'degenerate / min-degree dispatch for C_r-free graphs',
                  _run_odd_cycle_pipeline, (_odd_length,), default_r=5),
        Algorithm('local-search', 'single-flip hill climbing with restarts', _run_local_search),
        Algorithm('oracle', 'exact maximum cut', _run_oracle, (_oracle_size,)),
    )
}


def get_algorithm(name):
    """
    Raises:
        ParameterError: Unknown algorithm name
    """
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise ParameterError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}") from None
