"""
Invariant suites over a bundled graph corpus.

Each suite runs its checks on every applicable corpus graph and records the
failures. A failure keeps the graph, so the report can print the smallest
failing instance as an edge list.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from lib.generators import (
    blowup,
    complete,
    cycle,
    disjoint_union,
    gnp,
    paley,
    petersen,
    triangle_free_random,
)
from lib.graph import (
    Graph,
    degree_stats,
    edwards_bound,
    format_edge_list,
    hom_count_c5,
    iter_bits,
    triangle_count,
    two_path_count,
    walk_count,
)
from lib.oracle import local_search, max_cut_exact
from lib.rounding import analytic_expected_cut, augment_with_identity, hyperplane_round
from lib.sampling import bucket_neighborhood_cut, codegree_trimming_cut, sparse_set_cut, triangle_sampling_cut
from lib.spectral import eigenvalue_upper_bound, lambda_min, rayleigh_check, srg_lambda_min
from lib.structure import (
    RegularizationParams,
    check_monotone,
    clique_exponents,
    dyadic_codegree_bucket,
    good_partition,
    good_path_profile,
    regularize,
    st_sets,
    verify_good,
)
from lib.utils.errors import ParameterError, SurplusLabError
from lib.utils.seeding import derive_seed
from lib.vectors import (
    RegularVectorParams,
    SrgParams,
    c5_bucket_sets,
    odd_cycle_inner_product,
    odd_cycle_st_vectors,
    regular_edge_inner_product,
    regular_vectors,
    signed_vectors,
    srg_gamma,
)
from lib.vectors.regular import high_codegree_threshold

from .registry import SIGNED_GAMMA

log = logging.getLogger(__name__)

SUITES = ('core', 'rounding', 'vectors', 'structure', 'sampling', 'spectral')
ORACLE_AUDIT_MAX_VERTICES = 24
EIGENVALUE_SLACK = 1e-6
SRG_TOLERANCE = 1e-8
INNER_PRODUCT_TOLERANCE = 1e-12
# 4σ band: a correct graph fails one attempt with probability ≈ 6e-5, and the
# check retries once on a fresh stream before recording a failure
MONTE_CARLO_TRIALS = 10_000
STANDARD_ERRORS = 4
SAMPLING_TRIALS = 16
PROFILE_CYCLE_LENGTH = 5


@dataclass
class Failure:
    check: str
    label: str
    graph: Graph = field(repr=False)
    message: str


@dataclass
class SuiteReport:
    suite: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def minimal_failure(self):
        """The failure on the smallest graph (by n, then m)."""
        if not self.failures:
            return None
        return min(self.failures, key=lambda f: (f.graph.n, f.graph.m))


def corpus(seed=0):
    """Named small graphs plus seeded random ones; (label, graph) pairs."""
    graphs = [(f"complete {n}", complete(n)) for n in range(2, 8)]
    graphs += [(f"cycle {n}", cycle(n)) for n in range(3, 10)]
    graphs += [
        ('petersen', petersen()),
        ('paley 5', paley(5)),
        ('paley 13', paley(13)),
        ('paley 17', paley(17)),
        ('blowup 2 cycle 5', blowup(cycle(5), 2)),
        ('blowup 3 complete 3', blowup(complete(3), 3)),
        ('disjoint complete 4 complete 4', disjoint_union(complete(4), complete(4))),
    ]
    for index, (n, p) in enumerate([(8, 0.3), (10, 0.5), (12, 0.4), (14, 0.25), (16, 0.5)]):
        graphs.append((f"gnp {n} {p} seed={index}", gnp(n, p, derive_seed(seed, 'corpus', index))))
    graphs.append(('triangle_free 20 0.3', triangle_free_random(20, 0.3, derive_seed(seed, 'corpus', 'tf'))))
    return graphs


def _record(report, check, label, g, func):
    report.checks += 1
    try:
        message = func()
    except (SurplusLabError, AssertionError) as error:
        message = f"{type(error).__name__}: {error}"
    if message:
        report.failures.append(Failure(check, label, g, message))


def _profile(g, seed):
    """Good-path profile at r = 5; ParameterError when g has no 2-path."""
    return good_path_profile(g, PROFILE_CYCLE_LENGTH, seed=derive_seed(seed, 'verify', 'profile'))


def _chain(result):
    """First trial whose surplus falls below (X - Y - Z)/2, as a message."""
    for record in result.records:
        if record.surplus < Fraction(record.gain, 2):
            return f"trial {record.trial}: surplus {record.surplus} < (X - Y - Z)/2 = {Fraction(record.gain, 2)}"
    return None


# Suites

def _core(graphs, seed):
    report = SuiteReport('core')
    for label, g in graphs:
        def handshake(g=g):
            if sum(g.degrees) != 2 * g.m:
                return "degree sum differs from 2m"

        def triangles(g=g):
            expected = sum(nx.triangles(g.to_networkx()).values()) // 3
            if triangle_count(g) != expected:
                return f"triangle_count {triangle_count(g)} != networkx {expected}"

        def surplus_identity(g=g):
            result = local_search(g, seed, restarts=4)
            result.witness.validate()
            if result.surplus * 2 != 2 * result.mc - g.m:
                return "surplus differs from crossing - m/2"

        def edwards(g=g):
            if g.n > ORACLE_AUDIT_MAX_VERTICES:
                return None
            result = max_cut_exact(g)
            if float(result.surplus) < edwards_bound(g.m) - 1e-9:
                return f"oracle surplus {result.surplus} below Edwards {edwards_bound(g.m):.6f}"

        def degree_bounds(g=g):
            stats = degree_stats(g)
            if not stats.minimum <= stats.average <= stats.maximum:
                return "average degree outside [δ, Δ]"

        for name, check in (('handshake', handshake), ('triangles', triangles),
                            ('surplus_identity', surplus_identity), ('edwards', edwards),
                            ('degree_bounds', degree_bounds)):
            _record(report, name, label, g, check)
    return report


def _rounding(graphs, seed):
    report = SuiteReport('rounding')
    for label, g in graphs:
        if not g.is_regular() or g.m == 0 or g.max_degree > 0.99 * g.n:
            continue

        def monte_carlo(g=g):
            vectors = regular_vectors(g, RegularVectorParams.for_graph(g, 0.5))
            expected = analytic_expected_cut(g, vectors)
            for attempt in range(2):
                outcome = hyperplane_round(g, vectors, derive_seed(seed, 'verify', attempt), MONTE_CARLO_TRIALS)
                error = outcome.crossing_std / math.sqrt(MONTE_CARLO_TRIALS)
                if abs(outcome.mean_crossing - expected) <= STANDARD_ERRORS * max(error, 1e-12):
                    return None
            return f"mean crossing {outcome.mean_crossing:.4f} vs analytic {expected:.4f}"

        def identity_augmentation(g=g):
            vectors = regular_vectors(g, RegularVectorParams.for_graph(g, 0.5))
            augmented = augment_with_identity(g, vectors)
            us, vs = g.edge_array[:, 0], g.edge_array[:, 1]
            if not np.allclose(vectors.pair_products(us, vs), augmented.pair_products(us, vs)):
                return "augmentation changed edge inner products"

        _record(report, 'monte_carlo', label, g, monte_carlo)
        _record(report, 'identity_augmentation', label, g, identity_augmentation)
    return report


def _vectors(graphs, seed):
    report = SuiteReport('vectors')
    for label, g in graphs:
        if g.m == 0:
            continue

        def st_decomposition(g=g):
            try:
                prof = _profile(g, seed)
            except ParameterError:
                return None
            sets = st_sets(prof, prof.q)
            vectors = odd_cycle_st_vectors(g, sets)
            us, vs = g.edge_array[:, 0], g.edge_array[:, 1]
            for (u, v), value in zip(g.edges(), vectors.pair_products(us, vs)):
                a, b = odd_cycle_inner_product(g, sets, u, v)
                if a < 0 or b < 0:
                    return f"edge ({u}, {v}): negative part a={a!r} b={b!r}"
                if abs((b - a) - value) > INNER_PRODUCT_TOLERANCE * max(1.0, abs(value)):
                    return f"edge ({u}, {v}): b - a = {b - a!r} != dot product {value!r}"

        _record(report, 'st_decomposition', label, g, st_decomposition)
        if not g.is_regular() or g.max_degree > 0.99 * g.n:
            continue

        def inner_products(g=g):
            params = RegularVectorParams.for_graph(g, 0.5)
            vectors = regular_vectors(g, params)
            us, vs = g.edge_array[:, 0], g.edge_array[:, 1]
            direct = vectors.pair_products(us, vs)
            for (u, v), value in zip(g.edges(), direct):
                closed = regular_edge_inner_product(params, (g.rows[u] & g.rows[v]).bit_count())
                if abs(closed - value) > INNER_PRODUCT_TOLERANCE * max(1.0, abs(value)):
                    return f"edge ({u}, {v}): closed form {closed!r} != dot product {value!r}"

        def srg_negative(g=g):
            try:
                choice = srg_gamma(SrgParams.from_graph(g))
            except ParameterError:
                return None
            params = RegularVectorParams.for_graph(g, choice.gamma)
            for u, v in g.edges():
                value = regular_edge_inner_product(params, (g.rows[u] & g.rows[v]).bit_count())
                if value >= 0:
                    return f"edge ({u}, {v}): inner product {value!r} ≥ 0 at gamma={choice.gamma:.3g}"

        def signed_identity(g=g):
            params = RegularVectorParams.for_graph(g, SIGNED_GAMMA)
            try:
                signed = signed_vectors(g, params, seed)
            except ParameterError:
                return None
            regular = regular_vectors(g, params)
            if not np.allclose(signed.norms_squared(), regular.norms_squared()):
                return "sign draws changed a vector norm"
            threshold = high_codegree_threshold(params)
            if all((g.rows[u] & g.rows[v]).bit_count() <= threshold for u, v in g.edges()):
                if not np.array_equal(signed.vectors, regular.vectors):
                    return "no high-codegree edge, yet signed vectors differ from regular vectors"

        def c5_intersections(g=g):
            try:
                s = dyadic_codegree_bucket(g).s
            except ParameterError:
                return None
            sets = c5_bucket_sets(g, s)
            overlap = sum((sets.S[u] & sets.S[v]).bit_count() for u, v in g.edges())
            walks = hom_count_c5(g)
            if overlap * s * s > walks:
                return f"Σ|S(u)∩S(v)|·s² = {overlap * s * s} > hom(C5) = {walks} (s = {s})"

        for name, check in (('inner_products', inner_products), ('srg_negative', srg_negative),
                            ('signed_identity', signed_identity), ('c5_intersections', c5_intersections)):
            _record(report, name, label, g, check)
    return report


def _structure(graphs, seed):
    report = SuiteReport('structure')
    for label, g in graphs:
        for d in (1, 2, 3.5):
            _record(report, f'good_partition d={d}', label, g, lambda g=g, d=d: good_partition(g, d) and None)
        if g.m == 0:
            continue

        def regularized(g=g):
            params = RegularizationParams(*clique_exponents(4), 0.25)
            result = regularize(g, params, seed=seed, trials=8)
            if result.kind == 'cut' and float(result.cut.surplus) < result.target:
                return f"cut case surplus {result.cut.surplus} < θ²m/160 = {result.target:.6g}"

        def bucket_sums(g=g):
            total = two_path_count(g)
            if total == 0:
                return None
            choice = dyadic_codegree_bucket(g)
            if sum(choice.counts.values()) != total:
                return f"bucket counts sum to {sum(choice.counts.values())}, 2-paths = {total}"

        def profile(g=g):
            try:
                prof = _profile(g, seed)
            except ParameterError:
                return None
            verify_good(prof)
            check_monotone(prof)
            q = prof.q
            sets = st_sets(prof, q)
            delta = g.max_degree
            for u in range(g.n):
                if sets.S[u].bit_count() * sets.s > delta ** q:
                    return f"|S({u})|·s > Δ^q"
                if sets.T[u].bit_count() * sets.s_prime > delta ** (q - 1):
                    return f"|T({u})|·s' > Δ^(q-1)"
                for u0 in iter_bits(sets.S[u]):
                    if walk_count(g, u0, u, q) < sets.s:
                        return f"u0 = {u0} ∈ S({u}) with h_q = {walk_count(g, u0, u, q)} < s = {sets.s}"

        for name, check in (('regularize', regularized), ('bucket_sums', bucket_sums),
                            ('good_path_profile', profile)):
            _record(report, name, label, g, check)
    return report


def _sampling(graphs, seed):
    report = SuiteReport('sampling')
    for label, g in graphs:
        if g.m == 0 or g.average_degree < 1:
            continue

        def triangle_chain(g=g):
            return _chain(triangle_sampling_cut(g, seed=seed, trials=SAMPLING_TRIALS))

        _record(report, 'triangle_sampling_chain', label, g, triangle_chain)
        if not g.is_regular():
            continue

        def bucket_chain(g=g):
            try:
                sets = c5_bucket_sets(g, dyadic_codegree_bucket(g).s)
            except ParameterError:
                return None
            if sets.is_empty():
                return None
            return _chain(bucket_neighborhood_cut(g, sets, seed=seed, trials=SAMPLING_TRIALS))

        def sparse_set(g=g):
            result = sparse_set_cut(g, g.rows[0], seed=seed, trials=SAMPLING_TRIALS)
            result.cut.validate()
            if result.s_mask & result.t_mask:
                return "deduplicated S and T intersect"
            if result.surplus < Fraction(result.best_q, 2):
                return f"surplus {result.surplus} < Q/2 = {Fraction(result.best_q, 2)}"

        def trimming(g=g):
            result = codegree_trimming_cut(g, seed=seed, draws=4, trials=SAMPLING_TRIALS)
            result.cut.validate()
            if result.surplus < 0:
                return f"negative surplus {result.surplus}"
            if result.fallback:
                return None
            if result.S & ~g.rows[result.w]:
                return f"slice is not inside N({result.w})"
            if not result.params.level_inequality:
                return f"level {result.params.level} misses the level-mass inequality"
            if result.surplus < Fraction(result.sparse.best_q, 2):
                return f"surplus {result.surplus} < Q/2 = {Fraction(result.sparse.best_q, 2)}"

        for name, check in (('bucket_sampling_chain', bucket_chain), ('sparse_set', sparse_set),
                            ('codegree_trimming', trimming)):
            _record(report, name, label, g, check)
    return report


def _spectral(graphs, seed):
    report = SuiteReport('spectral')
    for label, g in graphs:
        if g.m == 0:
            continue

        def eigenvalue_bound(g=g):
            if g.n > ORACLE_AUDIT_MAX_VERTICES:
                return None
            mc = max_cut_exact(g).mc
            upper = eigenvalue_upper_bound(g)
            if mc > upper + EIGENVALUE_SLACK:
                return f"mc = {mc} above m/2 + |λ_min|n/4 = {upper:.6f}"

        def rayleigh(g=g):
            if not rayleigh_check(g, lambda_min(g).lambda_min, seed):
                return "Rayleigh quotient below λ_min"

        def srg_formula(g=g):
            try:
                params = SrgParams.from_graph(g)
            except ParameterError:
                return None
            closed = srg_lambda_min(params).value
            numeric = lambda_min(g).lambda_min
            if abs(closed - numeric) > SRG_TOLERANCE:
                return f"srg formula {closed!r} != numeric {numeric!r}"

        for name, check in (('eigenvalue_bound', eigenvalue_bound), ('rayleigh', rayleigh),
                            ('srg_formula', srg_formula)):
            _record(report, name, label, g, check)
    return report


RUNNERS = {
    'core': _core,
    'rounding': _rounding,
    'vectors': _vectors,
    'structure': _structure,
    'sampling': _sampling,
    'spectral': _spectral,
}


def run_suite(name, seed=0, graphs=None):
    """
    Run one suite or 'all'.

    Returns:
        list: SuiteReport per suite run

    Raises:
        ParameterError: Unknown suite name
    """
    if name != 'all' and name not in RUNNERS:
        raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}, all")
    graphs = corpus(seed) if graphs is None else graphs
    names = SUITES if name == 'all' else (name,)
    reports = []
    for suite in names:
        report = RUNNERS[suite](graphs, seed)
        log.info("verify suite=%s checks=%d failures=%d", suite, report.checks, len(report.failures))
        reports.append(report)
    return reports


def describe_failure(failure):
    """Failure text with the instance as an edge list."""
    return f"{failure.check} on {failure.label}: {failure.message}\n" + format_edge_list(
        failure.graph, header_lines=[f"failing instance: {failure.label}"]
    )
