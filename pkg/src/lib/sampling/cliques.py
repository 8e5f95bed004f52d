"""
Cuts of K_r-free graphs.

kr_recursive_cut regularizes the graph, picks k random centres with
replacement and recurses with r - 1 on each exclusive neighbourhood
A_i = N(v_i) minus the neighbourhoods of the other centres; each G[A_i] is
K_{r-1}-free. composite_kr_cut splits a graph into a degenerate part and a
min-degree core and cuts whichever side carries the edges.
"""

import logging
from dataclasses import dataclass

from lib.graph import Cut, triangle_count
from lib.oracle import improve_cut
from lib.rounding import hyperplane_round
from lib.structure import (
    RegularizationParams,
    ceil_positive,
    clique_exponents,
    combine_cuts,
    good_partition,
    lift_cut,
    regularize,
)
from lib.utils.errors import ParameterError
from lib.utils.parallel import ordered_map
from lib.utils.seeding import derive_seed, make_rng
from lib.utils.settings import get_settings
from lib.vectors import degenerate_vectors

from .neighborhood import DEFAULT_EPSILON, triangle_sampling_cut

log = logging.getLogger(__name__)

DEFAULT_RESTARTS = 4


@dataclass(frozen=True)
class KrCutResult:
    """
    Attributes:
        cut: Cut of g
        r: Clique size excluded
        depth: Recursion depth below this call (0 at the triangle base case)
        branch: 'recursion', 'triangle', 'regularize_cut', 'greedy' or 'empty'
        restarts: Centre draws tried at the top level
    """

    cut: Cut
    r: int
    depth: int
    branch: str
    restarts: int

    @property
    def surplus(self):
        return self.cut.surplus


@dataclass(frozen=True)
class CompositeCutResult:
    """
    Attributes:
        cut: Best candidate after a final hill-climb
        branch: 'bipartition', 'degenerate', 'min_degree' or 'empty'
        candidates: Surplus of every applicable branch, in evaluation order
        partition: GoodPartition used for the dispatch (None for empty graphs)
        threshold: Degree threshold of the partition
        degenerate_method: Routine that cut G[S] ('triangle_sampling' or
            'degenerate_vectors'), None when the degenerate branch did not run
    """

    cut: Cut
    branch: str
    candidates: dict
    partition: object = None
    threshold: float = 0.0
    degenerate_method: str | None = None

    @property
    def surplus(self):
        return self.cut.surplus


def _greedy(g):
    return improve_cut(g, combine_cuts(g, [], []))


def _degenerate_side_cut(sub, r, epsilon, seed, trials):
    """
    Cut of the d-degenerate side: neighbourhood sampling at its own average
    degree, and for r ≥ 4 also rounding of the degeneracy-order vectors.

    Returns:
        tuple: (cut, method name)
    """
    options = []
    if sub.average_degree >= 1:
        result = triangle_sampling_cut(sub, epsilon=epsilon, seed=derive_seed(seed, 'sampling'), trials=trials)
        options.append(('triangle_sampling', result.cut))
    if r >= 4 or not options:
        outcome = hyperplane_round(sub, degenerate_vectors(sub), derive_seed(seed, 'vectors'), trials)
        options.append(('degenerate_vectors', outcome.cut))
    method, cut = options[0]
    for name, other in options[1:]:
        if other.crossing > cut.crossing:
            method, cut = name, other
    return cut, method


def exclusive_neighborhoods(g, centres):
    """
    A_i for each centre: neighbours of v_i adjacent to no other centre,
    counting repeated centres with multiplicity.
    """
    hits = [0] * g.n
    for c in centres:
        for u in g.neighbors(c):
            hits[u] += 1
    return [[u for u in g.neighbors(c) if hits[u] == 1] for c in centres]


def _few_triangles(g, r, epsilon):
    """t(G) ≤ (1 - ε/(4r²))·(d/(6n))·Σ d(v)²."""
    d = float(g.average_degree)
    squares = sum(deg * deg for deg in g.degrees)
    return triangle_count(g) <= (1 - epsilon / (4 * r * r)) * d / (6 * g.n) * squares


def _recursion_cut(host, r, epsilon, seed, restart, restarts, trials):
    """One centre draw on a regularized host: (cut, depth)."""
    d = float(host.average_degree)
    C = max(1.0, host.max_degree / d)
    k = ceil_positive(epsilon / (8 * C * r * r) * host.n / d)
    rng = make_rng(seed, 'kr', r, restart)
    centres = [int(c) for c in rng.integers(0, host.n, size=k)]
    parts = [part for part in exclusive_neighborhoods(host, centres) if len(part) >= 2]

    def child(indexed):
        index, part = indexed
        sub, _ = host.induced(part)
        return _kr(sub, r - 1, epsilon, derive_seed(seed, 'kr', r, restart, index), restarts, trials)

    outcomes = ordered_map(child, list(enumerate(parts)))
    cut = combine_cuts(host, parts, [outcome.cut for outcome in outcomes])
    depth = 1 + max((outcome.depth for outcome in outcomes), default=0)
    log.debug("kr_recursion r=%d restart=%d k=%d parts=%d surplus=%s",
              r, restart, k, len(parts), cut.surplus)
    return improve_cut(host, cut), depth


def _kr(g, r, epsilon, seed, restarts, trials):
    if g.m == 0:
        return KrCutResult(Cut.trivial(g), r, 0, 'empty', 0)
    if g.average_degree < 1:
        return KrCutResult(_greedy(g), r, 0, 'greedy', 0)
    if r == 3:
        result = triangle_sampling_cut(g, epsilon=epsilon, seed=seed, trials=trials)
        return KrCutResult(result.cut, 3, 0, 'triangle', 0)

    alpha, beta = clique_exponents(r)
    params = RegularizationParams(alpha, beta, epsilon / r)
    reg = regularize(g, params, seed=seed, trials=trials)
    candidates = []
    if reg.kind == 'cut':
        candidates.append((reg.cut, 0, 'regularize_cut'))
        host, vertices = g, tuple(range(g.n))
    else:
        host, vertices = reg.subgraph, reg.vertices

    if host.m == 0 or host.average_degree < 1:
        local = _greedy(host)
        candidates.append((lift_cut(g, vertices, local), 0, 'greedy'))
    else:
        for restart in range(restarts):
            local, depth = _recursion_cut(host, r, epsilon, seed, restart, restarts, trials)
            candidates.append((lift_cut(g, vertices, local), depth, 'recursion'))
        if _few_triangles(host, r, epsilon):
            result = triangle_sampling_cut(host, epsilon=epsilon, seed=derive_seed(seed, 'kr', 'triangle'),
                                           trials=trials)
            candidates.append((lift_cut(g, vertices, result.cut), 0, 'triangle'))

    best = candidates[0]
    for candidate in candidates[1:]:
        if candidate[0].crossing > best[0].crossing:
            best = candidate
    cut, depth, branch = best
    # depth reports the recursion that ran, whichever candidate won
    depth = max(candidate[1] for candidate in candidates)
    return KrCutResult(cut, r, depth, branch, restarts)


def kr_recursive_cut(g, r, epsilon=DEFAULT_EPSILON, seed=0, restarts=None, trials=None):
    """
    Recursive exclusive-neighbourhood cut for K_r-free graphs.

    Args:
        g: Graph
        r: Excluded clique size (≥ 3)
        epsilon: Slack of the regularization and the sampling rate
        seed: Base seed
        restarts: Centre draws per level; defaults to 4
        trials: Trials of the sampling routines; defaults to SURPLUS_LAB_TRIALS

    Returns:
        KrCutResult

    Raises:
        ParameterError: If r < 3
    """
    if r < 3:
        raise ParameterError(f"r ≥ 3 required, got {r}")
    restarts = restarts or DEFAULT_RESTARTS
    trials = trials or get_settings().trials
    result = _kr(g, r, epsilon, seed, restarts, trials)
    log.info("kr_recursive_cut r=%d n=%d m=%d branch=%s depth=%d surplus=%s",
             r, g.n, g.m, result.branch, result.depth, result.surplus)
    return result


def composite_kr_cut(g, r, epsilon=DEFAULT_EPSILON, seed=0, trials=None):
    """
    Degenerate / min-degree dispatch for K_r-free graphs.

    With d = m^((r-1)/(2r-1)) and (S, T) = good_partition(g, d):
        e(S, T) ≥ 2m/3  → the bipartition (S | T)
        e(S) ≥ m/6      → neighbourhood sampling on G[S] (plus degenerate
                          vector rounding for r ≥ 4)
        e(T) ≥ m/6      → kr_recursive_cut on G[T]
    Every applicable branch runs; the best cut wins, ties to the earlier one.

    Returns:
        CompositeCutResult

    Raises:
        ParameterError: If r < 3
    """
    if r < 3:
        raise ParameterError(f"r ≥ 3 required, got {r}")
    if g.m == 0:
        return CompositeCutResult(Cut.trivial(g), 'empty', {'empty': Cut.trivial(g).surplus})
    m = g.m
    d = m ** ((r - 1) / (2 * r - 1))
    part = good_partition(g, d)
    s_mask, t_mask = part.s_mask, part.t_mask
    e_st = g.edges_between(s_mask, t_mask)
    e_s = g.edges_within(s_mask)
    e_t = g.edges_within(t_mask)

    trials = trials or get_settings().trials
    candidates = []
    method = None
    if 3 * e_st >= 2 * m:
        candidates.append(('bipartition', Cut.from_mask(g, t_mask)))
    if 6 * e_s >= m:
        sub, order = g.induced(part.S)
        local, method = _degenerate_side_cut(sub, r, epsilon, derive_seed(seed, 'composite', 'S'), trials)
        candidates.append(('degenerate', lift_cut(g, order, local)))
    if 6 * e_t >= m:
        sub, order = g.induced(part.T)
        result = kr_recursive_cut(sub, r, epsilon, derive_seed(seed, 'composite', 'T'), trials=trials)
        candidates.append(('min_degree', lift_cut(g, order, result.cut)))

    branch, best = candidates[0]
    for name, cut in candidates[1:]:
        if cut.crossing > best.crossing:
            branch, best = name, cut
    cut = improve_cut(g, best)
    log.info("composite_kr_cut r=%d d=%.4g e(S)=%d e(T)=%d e(S,T)=%d branch=%s degenerate=%s surplus=%s",
             r, d, e_s, e_t, e_st, branch, method, cut.surplus)
    return CompositeCutResult(
        cut=cut,
        branch=branch,
        candidates={name: c.surplus for name, c in candidates},
        partition=part,
        threshold=d,
        degenerate_method=method,
    )
