"""
Label-and-centre sampling cuts.

Each trial labels every vertex from a SamplingPlan and picks centres
v_1..v_k uniformly with repetition. A_j holds the label-0 vertices u whose
reach set (N(u) for the triangle routine, S(u) for the bucket routine)
contains v_j and no other centre; B_j holds the label-j vertices. With

    X = Σ e(A_j, B_j),  Y = Σ e(A_j),  Z = Σ e(B_j),

cutting every A_j against its B_j and combining the parts gives a cut of
surplus at least (X - Y - Z)/2, which is checked on every trial.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lib.graph import Cut
from lib.oracle import improve_cut
from lib.structure import SamplingPlan, ceil_positive, combine_cuts, split_cut
from lib.utils.errors import InvariantViolation, ParameterError
from lib.utils.parallel import ordered_map
from lib.utils.seeding import make_rng
from lib.utils.settings import get_settings

log = logging.getLogger(__name__)

DEFAULT_EPSILON = 0.1
DEFAULT_MU = 0.1


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    x: int
    y: int
    z: int
    surplus: Fraction

    @property
    def gain(self):
        """X - Y - Z."""
        return self.x - self.y - self.z


@dataclass(frozen=True)
class SamplingCutResult:
    """
    Attributes:
        cut: Best cut over the trials
        parts: (A_j, B_j) bitmask pairs of the best trial
        xyz: (X, Y, Z) of the best trial
        trials: Trial count
        records: One TrialRecord per trial, in trial order
        plan: The SamplingPlan used
    """

    cut: Cut
    parts: tuple
    xyz: tuple
    trials: int
    records: tuple
    plan: SamplingPlan

    @property
    def surplus(self):
        return self.cut.surplus

    @property
    def mean_gain(self):
        return sum(record.gain for record in self.records) / len(self.records)


def _sample_parts(g, reach, plan, trial):
    """(A_j, B_j) bitmask pairs for one trial."""
    rng = make_rng(plan.seed, 'sampling', trial)
    labels = plan.draw_labels(g.n, rng)
    centres = [int(c) for c in rng.integers(0, g.n, size=plan.k)]

    multiplicity = {}
    for c in centres:
        multiplicity[c] = multiplicity.get(c, 0) + 1
    centre_mask = 0
    for c in multiplicity:
        centre_mask |= 1 << c
    slot = {c: j for j, c in enumerate(centres) if multiplicity[c] == 1}

    a_masks = [0] * plan.k
    for u in np.flatnonzero(labels == 0):
        u = int(u)
        hits = reach[u] & centre_mask
        if hits.bit_count() == 1:
            j = slot.get(hits.bit_length() - 1)
            if j is not None:
                a_masks[j] |= 1 << u
    b_masks = [0] * plan.k
    for u in np.flatnonzero((labels >= 1) & (labels <= plan.k)):
        b_masks[int(labels[u]) - 1] |= 1 << int(u)
    return list(zip(a_masks, b_masks))


def _cut_from_parts(g, parts):
    vertex_sets, part_cuts = [], []
    for a_mask, b_mask in parts:
        if not a_mask | b_mask:
            continue
        order, local = split_cut(g, a_mask, b_mask)
        vertex_sets.append(order)
        part_cuts.append(improve_cut(local.graph, local))
    return combine_cuts(g, vertex_sets, part_cuts)


def _run_trial(g, reach, plan, trial):
    parts = _sample_parts(g, reach, plan, trial)
    x = sum(g.edges_between(a, b) for a, b in parts)
    y = sum(g.edges_within(a) for a, _ in parts)
    z = sum(g.edges_within(b) for _, b in parts)
    cut = _cut_from_parts(g, parts)
    floor = Fraction(x - y - z, 2)
    if cut.surplus < floor:
        raise InvariantViolation(f"trial {trial}: surplus {cut.surplus} < (X - Y - Z)/2 = {floor}")
    log.debug("sampling trial=%d X=%d Y=%d Z=%d surplus=%s", trial, x, y, z, cut.surplus)
    return TrialRecord(trial, x, y, z, cut.surplus), cut, tuple(parts)


def sample_cut(g, reach, plan, trials):
    """
    Best labelled-part cut over independent trials.

    Args:
        g: Graph
        reach: Per-vertex bitmask; u joins A_j when reach[u] meets the
               centres exactly in v_j
        plan: SamplingPlan
        trials: Number of trials (≥ 1)

    Returns:
        SamplingCutResult: ties go to the earliest trial
    """
    if trials < 1:
        raise ParameterError(f"trials ≥ 1 required, got {trials}")
    outcomes = ordered_map(lambda t: _run_trial(g, reach, plan, t), range(trials))
    best = 0
    for index, (record, _, _) in enumerate(outcomes):
        if record.surplus > outcomes[best][0].surplus:
            best = index
    record, cut, parts = outcomes[best]
    return SamplingCutResult(
        cut=cut,
        parts=parts,
        xyz=(record.x, record.y, record.z),
        trials=trials,
        records=tuple(outcome[0] for outcome in outcomes),
        plan=plan,
    )


def triangle_sampling_cut(g, epsilon=DEFAULT_EPSILON, C=None, seed=0, trials=None):
    """
    Neighbourhood sampling for graphs with few triangles.

    Uses μ = ε/(4C), k = ⌈μn/d⌉ centres and label probability d/(3n).

    Args:
        g: Graph with average degree d ≥ 1
        epsilon: Triangle deficit parameter
        C: Bound on Δ/d; defaults to the realized ratio
        seed: Base seed
        trials: Defaults to SURPLUS_LAB_TRIALS

    Returns:
        SamplingCutResult

    Raises:
        ParameterError: If d < 1 or Δ > C·d
    """
    trials = trials or get_settings().trials
    d = float(g.average_degree)
    if d < 1:
        raise ParameterError(f"average degree d ≥ 1 required, got {d:.4g}")
    if C is None:
        C = g.max_degree / d
    if g.max_degree > C * d * (1 + 1e-12):
        raise ParameterError(f"Δ ≤ C·d violated: Δ = {g.max_degree}, C·d = {C * d:.6g}")
    mu = epsilon / (4 * C)
    k = ceil_positive(mu * g.n / d)
    p = d / (3 * g.n)
    if k * p > 2 / 3 + 1e-12:
        raise InvariantViolation(f"k·d/(3n) = {k * p:.6g} > 2/3")
    plan = SamplingPlan(k, p, seed)
    result = sample_cut(g, g.rows, plan, trials)
    log.info("triangle_sampling_cut n=%d k=%d p=%.4g trials=%d surplus=%s",
             g.n, k, p, trials, result.surplus)
    return result


def bucket_neighborhood_cut(g, sets, seed=0, trials=None, mu=DEFAULT_MU):
    """
    Neighbourhood sampling over bucket sets S(u).

    Uses k = ⌈s·n/(2Δ^q)⌉ centres and p = μ·ν·d^q/(s·n), clamped to 2/(3k).

    Args:
        g: Graph
        sets: BucketSets (C5 windows or odd-cycle threshold sets)
        seed: Base seed
        trials: Defaults to SURPLUS_LAB_TRIALS
        mu: Label probability scale

    Returns:
        SamplingCutResult

    Raises:
        ParameterError: If every S(u) is empty
    """
    trials = trials or get_settings().trials
    if sets.is_empty():
        raise ParameterError("all bucket sets S(u) are empty")
    if sets.n != g.n:
        raise ParameterError(f"bucket sets cover {sets.n} vertices, graph has {g.n}")
    q, s = sets.q, sets.s
    d = float(g.average_degree)
    k = ceil_positive(s * g.n / (2 * g.max_degree ** q))
    p = mu * sets.nu * d ** q / (s * g.n)
    plan = SamplingPlan.clamped(k, p, seed)
    if plan.p < p:
        log.info("bucket_neighborhood_cut clamped p=%.4g to %.4g (k=%d)", p, plan.p, k)
    result = sample_cut(g, sets.S, plan, trials)
    log.info("bucket_neighborhood_cut n=%d q=%d s=%d k=%d p=%.4g mean_gain=%.4g surplus=%s",
             g.n, q, s, k, plan.p, result.mean_gain, result.surplus)
    return result


def expected_gain_terms(g, sets, plan):
    """
    Reference scales of E[X], E[Y], E[Z] for the bucket routine:
    k·p·d·Σ|S(u)|/(6n), k·Σ_{uv∈E}|S(u)∩S(v)|/n and k·p²·n·d/2.
    """
    d = float(g.average_degree)
    total_s = sum(mask.bit_count() for mask in sets.S)
    overlap = sum((sets.S[u] & sets.S[v]).bit_count() for u, v in g.edges())
    return (plan.k * plan.p * d * total_s / (6 * g.n),
            plan.k * overlap / g.n,
            plan.k * plan.p ** 2 * g.n * d / 2)
