"""
Regularization: pass to an induced subgraph of bounded maximum degree, or
produce a cut with large surplus on the way.

With S the vertices of degree at most C0·d and T the rest, each round does
one of:
    shrink  - e(T) ≥ (θ²/20)m: continue inside G[T]
    cut     - e(S, T) ≥ (θ/2)m: sample S' ⊆ S at rate θ/4 and cut S' against T
    bounded - otherwise e(S) ≥ (1-θ)m and G[S] has Δ ≤ C·d̃
"""

import logging
from dataclasses import dataclass

from lib.graph import Cut, iter_bits, mask_of
from lib.utils.errors import InvariantViolation, ParameterError
from lib.utils.seeding import make_rng

from .combine import combine_cuts, split_cut

log = logging.getLogger(__name__)

RELATIVE_SLACK = 1e-9
# the cut case doubles its subset draws up to this many before giving up
MAX_SUBSET_TRIALS = 4096


@dataclass(frozen=True)
class RegularizationParams:
    """
    Exponents α, β and slack ε with the derived constants.

    θ solves (1-θ)^β = 1-ε, c = θ²/320, C0 solves (θ²/20)^β C0^(β-α) = 1,
    and C = C0/(1-θ).
    """

    alpha: float
    beta: float
    epsilon: float

    def __post_init__(self):
        if self.beta <= 0:
            raise ParameterError(f"beta > 0 required, got {self.beta}")
        if self.alpha >= self.beta:
            raise ParameterError(f"alpha < beta required, got {self.alpha} ≥ {self.beta}")
        if self.alpha + self.beta > 2 + 1e-12:
            raise ParameterError(f"alpha + beta ≤ 2 required, got {self.alpha + self.beta}")
        if not 0 < self.epsilon < 1:
            raise ParameterError(f"0 < epsilon < 1 required, got {self.epsilon}")

    @property
    def theta(self):
        return 1 - (1 - self.epsilon) ** (1 / self.beta)

    @property
    def c(self):
        return self.theta ** 2 / 320

    @property
    def c0(self):
        return (self.theta ** 2 / 20) ** (-self.beta / (self.beta - self.alpha))

    @property
    def C(self):
        return self.c0 / (1 - self.theta)

    @classmethod
    def basic(cls, beta, alpha=0.0):
        """The ε = 1/2 instance used by the min-degree variant."""
        return cls(alpha, beta, 0.5)

    @property
    def basic_c2(self):
        """Size retained by the min-degree variant: 2^(-β-1)."""
        return 2.0 ** (-self.beta - 1)

    @property
    def basic_C(self):
        """Degree ratio of the min-degree variant: 4C."""
        return 4 * self.C

    def weight(self, n, d):
        """n^α d^β (0 when d = 0)."""
        if n == 0 or d <= 0:
            return 0.0
        return n ** self.alpha * d ** self.beta


@dataclass(frozen=True)
class RegularizationResult:
    params: RegularizationParams
    trace: tuple
    vertices: tuple
    subgraph: object = None
    cut: Cut | None = None
    target: float | None = None
    subset_trials: int = 0

    @property
    def kind(self):
        return 'cut' if self.cut is not None else 'subgraph'


def _at_least(value, bound):
    return value >= bound - RELATIVE_SLACK * max(1.0, abs(bound))


def _subset_cut(g, s_mask, t_mask, theta, seed, trials):
    """Best cut (S' | T) over random S' ⊆ S kept at rate θ/4, lifted to g."""
    members = list(iter_bits(s_mask))
    best_value, best_mask = None, 0
    for trial in range(trials):
        rng = make_rng(seed, 'regularize', 'subset', trial)
        keep = rng.random(len(members)) < theta / 4
        chosen = mask_of(v for v, k in zip(members, keep) if k)
        value = g.edges_between(chosen, t_mask) - g.edges_within(chosen) - g.edges_within(t_mask)
        if best_value is None or value > best_value:
            best_value, best_mask = value, chosen
    vertices, local_cut = split_cut(g, best_mask, t_mask)
    return combine_cuts(g, [vertices], [local_cut])


def regularize(g, params, seed=0, trials=64):
    """
    Run the three-case regularization loop.

    Args:
        g: Graph
        params: RegularizationParams
        seed: Seed for the subset sampling of the cut case
        trials: Subset draws in the cut case

    Returns:
        RegularizationResult: either a cut of g or a bounded-degree induced
        subgraph; trace lists the case taken in each round

    Raises:
        InvariantViolation: If a postcondition fails or the loop does not end
    """
    theta, c0 = params.theta, params.c0
    start_weight = params.weight(g.n, float(g.average_degree))
    current, vertices = g, tuple(range(g.n))
    trace = []

    for _ in range(g.n + 1):
        n, m = current.n, current.m
        d = float(current.average_degree)
        s_mask = mask_of(v for v in range(n) if current.degree(v) <= c0 * d)
        t_mask = current.full_mask & ~s_mask
        e_t = current.edges_within(t_mask)
        e_st = current.edges_between(s_mask, t_mask)

        if m > 0 and e_t >= theta ** 2 / 20 * m:
            trace.append('shrink')
            sub, order = current.induced(iter_bits(t_mask))
            before = params.weight(n, d)
            after = params.weight(sub.n, float(sub.average_degree))
            if sub.n >= n or not _at_least(after, before):
                raise InvariantViolation(
                    f"shrink step lost weight: {after:.6g} < {before:.6g} (n {n} → {sub.n})"
                )
            log.debug("regularize case=shrink n=%d m=%d next_n=%d", n, m, sub.n)
            current, vertices = sub, tuple(vertices[v] for v in order)
            continue

        if m > 0 and e_st >= theta / 2 * m:
            trace.append('cut')
            target = theta ** 2 / 160 * m
            attempts = max(1, trials)
            local = _subset_cut(current, s_mask, t_mask, theta, seed, attempts)
            while float(local.surplus) < target and attempts < MAX_SUBSET_TRIALS:
                attempts = min(2 * attempts, MAX_SUBSET_TRIALS)
                log.debug("regularize cut below target surplus=%s target=%.4g retry trials=%d",
                          local.surplus, target, attempts)
                local = _subset_cut(current, s_mask, t_mask, theta, seed, attempts)
            if float(local.surplus) < target:
                raise InvariantViolation(
                    f"cut case surplus {local.surplus} < θ²m/160 = {target:.6g} after {attempts} subset draws"
                )
            cut = combine_cuts(g, [vertices], [local])
            if float(cut.surplus) < params.c * start_weight:
                log.info("regularize cut below weighted target surplus=%s weighted=%.4g",
                         cut.surplus, params.c * start_weight)
            log.info("regularize case=cut n=%d m=%d trials=%d surplus=%s", n, m, attempts, cut.surplus)
            return RegularizationResult(params, tuple(trace), vertices, cut=cut, target=target,
                                        subset_trials=attempts)

        trace.append('bounded')
        sub, order = current.induced(iter_bits(s_mask))
        sub_d = float(sub.average_degree)
        if sub.max_degree > params.C * sub_d * (1 + RELATIVE_SLACK):
            raise InvariantViolation(
                f"bounded subgraph has Δ = {sub.max_degree} > C·d̃ = {params.C * sub_d:.6g}"
            )
        final_weight = params.weight(sub.n, sub_d)
        if not _at_least(final_weight, (1 - params.epsilon) * start_weight):
            raise InvariantViolation(
                f"bounded subgraph weight {final_weight:.6g} < (1-ε)·{start_weight:.6g}"
            )
        log.info("regularize case=bounded rounds=%d n=%d d=%.4g", len(trace), sub.n, sub_d)
        return RegularizationResult(
            params, tuple(trace), tuple(vertices[v] for v in order), subgraph=sub
        )

    raise InvariantViolation(f"regularization did not terminate within {g.n + 1} rounds")


def min_degree_core(g, threshold):
    """Induced subgraph left after repeatedly deleting vertices of degree < threshold."""
    alive = g.full_mask
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if g.degree_into(v, alive) < threshold:
                alive &= ~(1 << v)
                changed = True
    return g.induced(iter_bits(alive))


def regularize_basic(g, beta, alpha=0.0, seed=0, trials=64):
    """
    Min-degree variant: regularize with ε = 1/2, then keep the subgraph left
    after deleting vertices of degree below a quarter of its average degree.

    Returns:
        RegularizationResult: the subgraph also has minimum degree at least a
        quarter of the pre-peeling average degree
    """
    params = RegularizationParams.basic(beta, alpha)
    result = regularize(g, params, seed, trials)
    if result.kind == 'cut':
        return result
    sub = result.subgraph
    core, order = min_degree_core(sub, float(sub.average_degree) / 4)
    if core.m * 2 < sub.m:
        raise InvariantViolation(f"core kept {core.m} of {sub.m} edges")
    vertices = tuple(result.vertices[v] for v in order)
    ratio = core.max_degree / float(core.average_degree) if core.m else 0.0
    log.info("regularize_basic n=%d core_n=%d ratio=%.4g C=%.4g c2=%.4g",
             sub.n, core.n, ratio, params.basic_C, params.basic_c2)
    return RegularizationResult(params, result.trace + ('core',), vertices, subgraph=core)


def odd_cycle_exponents(r):
    """(α, β) = (r/(r+1), (2r+1)/(2r+2)) for C_r-free regularization."""
    return r / (r + 1), (2 * r + 1) / (2 * r + 2)


def clique_exponents(r):
    """(α, β) = (-(r-3), r-1) for the K_r recursion."""
    return -(r - 3), r - 1
