"""Degenerate / min-degree dispatch for C_r-free graphs, r odd."""

import logging
from dataclasses import dataclass

from lib.graph import Cut
from lib.oracle import improve_cut
from lib.rounding import augment_with_identity, hyperplane_round
from lib.structure import (
    combine_cuts,
    good_partition,
    good_path_profile,
    lift_cut,
    odd_cycle_exponents,
    regularize_basic,
    sdp_level,
    st_sets,
    with_level,
)
from lib.utils.errors import ParameterError
from lib.utils.seeding import derive_seed
from lib.utils.settings import get_settings
from lib.vectors import degenerate_vectors, odd_cycle_st_vectors

from .cliques import composite_kr_cut
from .neighborhood import bucket_neighborhood_cut

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class OddCycleCutResult:
    """
    Attributes:
        cut: Best candidate after a final hill-climb
        branch: Winning candidate name
        candidates: Surplus per candidate that ran
        skipped: Candidate name → reason, for branches whose preconditions failed
    """

    cut: Cut
    branch: str
    candidates: dict
    skipped: dict

    @property
    def surplus(self):
        return self.cut.surplus


def _min_degree_cuts(sub, r, seed, trials, skipped):
    """Named cuts of sub from its regularized core; lifted to sub."""
    alpha, beta = odd_cycle_exponents(r)
    reg = regularize_basic(sub, beta, alpha, seed=derive_seed(seed, 'regularize'), trials=trials)
    if reg.kind == 'cut':
        return [('regularize_cut', reg.cut)]
    core, vertices = reg.subgraph, reg.vertices
    if core.m == 0:
        skipped['min_degree'] = 'regularized core has no edges'
        return []

    try:
        prof = good_path_profile(core, r, seed=derive_seed(seed, 'profile'))
    except ParameterError as error:
        skipped['min_degree'] = str(error)
        return []

    cuts = []
    try:
        q = sdp_level(prof)
        level = prof if q == prof.q else with_level(prof, q, seed=derive_seed(seed, 'profile', q))
        vectors = augment_with_identity(core, odd_cycle_st_vectors(core, st_sets(level, q)))
        outcome = hyperplane_round(core, vectors, derive_seed(seed, 'sdp'), trials)
        cuts.append(('st_vectors', lift_cut(sub, vertices, outcome.cut)))
    except ParameterError as error:
        skipped['st_vectors'] = str(error)
    try:
        result = bucket_neighborhood_cut(core, st_sets(prof, prof.q), seed=derive_seed(seed, 'buckets'),
                                         trials=trials)
        cuts.append(('bucket_sampling', lift_cut(sub, vertices, result.cut)))
    except ParameterError as error:
        skipped['bucket_sampling'] = str(error)
    return cuts


def odd_cycle_pipeline_cut(g, r, seed=0, trials=None):
    """
    Cut a C_r-free graph.

    With d = m^(2/(r+2)) and (S, T) = good_partition(g, d):
        e(S, T) ≥ 2m/3 → the bipartition (S | T)
        e(S) ≥ m/6     → hyperplane rounding of degenerate_vectors on G[S]
        e(T) ≥ m/6     → regularize G[T], then round the S/T vectors and run
                         bucket sampling on the good-path profile of the core
    r = 3 goes to composite_kr_cut. Branches whose preconditions fail are
    recorded in `skipped`.

    Returns:
        OddCycleCutResult

    Raises:
        ParameterError: If r is not 3 and not an odd integer ≥ 5
    """
    trials = trials or get_settings().trials
    if r == 3:
        result = composite_kr_cut(g, 3, seed=seed, trials=trials)
        return OddCycleCutResult(result.cut, f"composite:{result.branch}", dict(result.candidates), {})
    if r < 5 or r % 2 == 0:
        raise ParameterError(f"r must be 3 or an odd integer ≥ 5, got {r}")
    if g.m == 0:
        cut = Cut.trivial(g)
        return OddCycleCutResult(cut, 'empty', {'empty': cut.surplus}, {})

    m = g.m
    d = m ** (2 / (r + 2))
    part = good_partition(g, d)
    e_st = g.edges_between(part.s_mask, part.t_mask)
    e_s = g.edges_within(part.s_mask)
    e_t = g.edges_within(part.t_mask)

    candidates, skipped = [], {}
    if 3 * e_st >= 2 * m:
        candidates.append(('bipartition', Cut.from_mask(g, part.t_mask)))
    if 6 * e_s >= m:
        sub, order = g.induced(part.S)
        outcome = hyperplane_round(sub, degenerate_vectors(sub), derive_seed(seed, 'degenerate'), trials)
        candidates.append(('degenerate', lift_cut(g, order, outcome.cut)))
    if 6 * e_t >= m:
        sub, order = g.induced(part.T)
        for name, cut in _min_degree_cuts(sub, r, derive_seed(seed, 'min_degree'), trials, skipped):
            candidates.append((name, lift_cut(g, order, cut)))
    for name, reason in skipped.items():
        log.info("odd_cycle_pipeline_cut skipped=%s reason=%s", name, reason)
    if not candidates:
        candidates.append(('greedy', combine_cuts(g, [], [])))

    branch, best = candidates[0]
    for name, cut in candidates[1:]:
        if cut.crossing > best.crossing:
            branch, best = name, cut
    cut = improve_cut(g, best)
    log.info("odd_cycle_pipeline_cut r=%d d=%.4g e(S)=%d e(T)=%d e(S,T)=%d branch=%s surplus=%s",
             r, d, e_s, e_t, e_st, branch, cut.surplus)
    return OddCycleCutResult(cut, branch, {name: c.surplus for name, c in candidates}, skipped)
