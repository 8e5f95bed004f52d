"""
Random-hyperplane rounding of vector assignments.

For non-zero vectors x^v and a Gaussian direction z, the cut
{v : ⟨x^v, z⟩ < 0} separates an edge uv with probability
arccos(cos θ_uv)/π, so the expected crossing is
m/2 - (1/π) Σ_uv arcsin(cos θ_uv).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from lib.graph import Cut
from lib.utils.errors import ParameterError, VectorError
from lib.utils.parallel import chunk_ranges, ordered_map
from lib.utils.seeding import make_rng

from .assignment import VectorAssignment, store_rows

log = logging.getLogger(__name__)

COSINE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RoundingOutcome:
    cut: Cut
    trials: int
    best_crossing: int
    analytic_expectation: float
    mean_crossing: float
    crossing_std: float


def edge_cosines(g, va):
    """
    Cosine similarity of the two endpoint vectors of every edge, clamped to [-1, 1].

    Raises:
        VectorError: On zero vectors or cosines beyond the 1e-9 tolerance
    """
    if va.n != g.n:
        raise VectorError(f"{va.label}: assignment has {va.n} vectors for {g.n} vertices")
    va.require_nonzero()
    if g.m == 0:
        return np.zeros(0)
    us, vs = g.edge_array[:, 0], g.edge_array[:, 1]
    norms = np.sqrt(va.norms_squared())
    cosines = va.pair_products(us, vs) / (norms[us] * norms[vs])
    worst = float(np.max(np.abs(cosines)))
    if worst > 1 + COSINE_TOLERANCE:
        raise VectorError(f"{va.label}: cosine similarity {worst!r} outside [-1, 1]")
    return np.clip(cosines, -1.0, 1.0)


def analytic_expected_cut(g, va):
    """
    Expected crossing of hyperplane rounding.

    Examples:
        single edge, x^u = -x^v → 1.0
        single edge, orthogonal → 0.5
    """
    cosines = edge_cosines(g, va)
    return g.m / 2 - math.fsum(np.arcsin(cosines)) / math.pi


def hyperplane_round(g, va, seed, trials):
    """
    Best cut over independent hyperplane draws.

    Trial t uses the stream (seed, 'hyperplane', t), so the result does not
    depend on how trials are spread across threads.

    Args:
        g: Graph
        va: VectorAssignment covering all vertices
        seed: Base seed
        trials: Number of draws (≥ 1)

    Returns:
        RoundingOutcome
    """
    if trials < 1:
        raise ParameterError(f"trials ≥ 1 required, got {trials}")
    expectation = analytic_expected_cut(g, va)
    us, vs = g.edge_array[:, 0], g.edge_array[:, 1]

    def draw(t):
        z = make_rng(seed, 'hyperplane', t).standard_normal(va.dim)
        return va.project(z) < 0

    def run(bounds):
        return [int(np.count_nonzero(side[us] != side[vs]))
                for side in (draw(t) for t in range(*bounds))]

    crossings = np.asarray(
        [c for chunk in ordered_map(run, chunk_ranges(trials, 16)) for c in chunk], dtype=np.int64
    )
    best_trial = int(np.argmax(crossings))
    cut = Cut.from_sides(g, draw(best_trial).astype(np.int64))
    log.debug("hyperplane_round label=%s trials=%d best=%d expectation=%.4f",
              va.label, trials, cut.crossing, expectation)
    return RoundingOutcome(
        cut=cut,
        trials=trials,
        best_crossing=cut.crossing,
        analytic_expectation=expectation,
        mean_crossing=float(crossings.mean()),
        crossing_std=float(crossings.std(ddof=1)) if trials > 1 else 0.0,
    )


def augment_with_identity(g, va):
    """Append e_v to every x^v: norms grow by 1, pairwise products are unchanged."""
    if va.is_sparse:
        stacked = sp.hstack([va.vectors, sp.identity(g.n, format='csr')], format='csr')
    else:
        stacked = np.hstack([va.vectors, np.eye(g.n)])
    return VectorAssignment(store_rows(stacked), f"{va.label}+identity")


def surplus_lower_bound_from_products(edge_products, max_norm_sq=1.0, norm_products=None):
    """
    Concrete lower bound on the expected surplus after identity augmentation.

    Each edge contributes ⟨y^u, y^v⟩ ≤ b_uv - a_uv with a, b ≥ 0. Using
    arcsin(x) ≤ (π/2)b' - a' whenever x ≤ b' - a', with a' = a/P, b' = b/P
    and P = ‖y^u‖‖y^v‖, gives
        surplus ≥ (1/π) Σ (a_uv - (π/2) b_uv) / P_uv.
    Without per-edge norms, 1 ≤ P ≤ max‖y‖² yields
        surplus ≥ Σ a / (π max‖y‖²) - Σ b / 2.

    Args:
        edge_products: Sequence of (a_uv, b_uv)
        max_norm_sq: Upper bound on ‖y^v‖² (≥ 1 after augmentation)
        norm_products: Optional per-edge ‖y^u‖‖y^v‖ values

    Returns:
        float: The bound (0 for no edges)

    Raises:
        ParameterError: Negative a or b, or max_norm_sq < 1
    """
    pairs = list(edge_products)
    if any(a < 0 or b < 0 for a, b in pairs):
        raise ParameterError("a_uv ≥ 0 and b_uv ≥ 0 required")
    if max_norm_sq < 1:
        raise ParameterError(f"augmented squared norms are ≥ 1, got bound {max_norm_sq}")
    if not pairs:
        return 0.0
    if norm_products is not None:
        products = list(norm_products)
        if len(products) != len(pairs) or any(p < 1 for p in products):
            raise ParameterError("one norm product ≥ 1 per edge required")
        return math.fsum((a - math.pi / 2 * b) / p for (a, b), p in zip(pairs, products)) / math.pi
    total_a = math.fsum(a for a, _ in pairs)
    total_b = math.fsum(b for _, b in pairs)
    return total_a / (math.pi * max_norm_sq) - total_b / 2
