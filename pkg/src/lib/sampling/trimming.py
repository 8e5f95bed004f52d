"""
Codegree trimming for regular graphs with many high-codegree edges.

The auxiliary graph H lives on the directed edges (u, v) of G, with
(u, v) ~ (u, w) whenever vw is an edge, so H is the disjoint union of the
neighbourhood graphs G[N(u)] and d_H(u, v) = d(u, v). Removing a random
slice of the vertices whose codegree excess sits in one dyadic level leaves
a set T with few H-edges; one neighbourhood slice T_w ⊆ N(w) is then a
sparse set of G and goes to sparse_set_cut.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from lib.graph import Cut, triangle_count
from lib.oracle import improve_cut
from lib.structure import combine_cuts
from lib.utils.errors import InvariantViolation, ParameterError
from lib.utils.seeding import make_rng

from .sparse import SparseSetResult, sparse_set_cut, sparse_set_target

log = logging.getLogger(__name__)

AUX_CONSTANT = Fraction(1, 12 * 40 ** 2)
EXCESS_WINDOW = 20
DEFAULT_DRAWS = 50


@dataclass(frozen=True)
class AuxGraphParams:
    """
    Attributes:
        N: Vertices of H (= nd)
        D: Target degree d²/n
        c: Absolute constant 1/(12·40²)
        level: Selected dyadic level i ≥ 1
        p: Keep rate 2^(-i) of the removal sample
        q_mass: Σ Δ₊(z)³ over z with d_H(z) ≤ 20D
        level_mass: Σ Δ₊(z)³ over the selected level
        level_size: Vertices of H in the selected level
    """

    N: int
    D: Fraction
    c: Fraction
    level: int
    p: Fraction
    q_mass: Fraction
    level_mass: Fraction
    level_size: int

    @property
    def level_inequality(self):
        """Level mass ≥ q/2^i."""
        return self.level_mass * 2 ** self.level >= self.q_mass


@dataclass(frozen=True)
class TrimmingResult:
    """
    Attributes:
        cut: Cut of g
        params: AuxGraphParams (None on fallback)
        tag: Fallback reason, or None
        w: Vertex whose neighbourhood slice was used
        S: Bitmask of the slice T_w ⊆ N(w)
        target: ½(|S|²d/(2n) - e(S)) of the slice
        aux_inequality: e_H(T) ≤ |T|²D/(2N) - (c/D²)q for the chosen T
        inequality_holds: e(S) ≤ |S|²d/(2n) - (2cn/d⁴)·Σ_{uv∈E} δ₊³ for the slice
        sparse: SparseSetResult of the slice
    """

    cut: Cut
    params: AuxGraphParams | None = None
    tag: str | None = None
    w: int | None = None
    S: int = 0
    target: Fraction = Fraction(0)
    aux_inequality: bool = False
    inequality_holds: bool = False
    sparse: SparseSetResult | None = None

    @property
    def surplus(self):
        return self.cut.surplus

    @property
    def fallback(self):
        return self.tag is not None


def aux_edge_count(g):
    """e(H) = Σ_u e(N(u)), checked against 3·t(G)."""
    total = sum(g.edges_within(row) for row in g.rows)
    triangles = triangle_count(g)
    if total != 3 * triangles:
        raise InvariantViolation(f"e(H) = {total} but 3·t(G) = {3 * triangles}")
    return total


def excess_levels(g):
    """
    Directed edges z = (u, v) with 0 < Δ₊(z) and d(u, v) ≤ 20D, grouped by
    the level i with 2^(-i)·20D < Δ₊(z) ≤ 2^(-(i-1))·20D.

    Returns:
        tuple: (D, q_mass, {level: [(u, v), ...]}, {level: mass})
    """
    n, d = g.n, g.max_degree
    D = Fraction(d * d, n)
    members, masses = {}, {}
    q_mass = Fraction(0)
    for u in range(g.n):
        for v in g.neighbors(u):
            h = (g.rows[u] & g.rows[v]).bit_count()
            excess = h - D
            if excess <= 0 or h > EXCESS_WINDOW * D:
                continue
            cube = excess ** 3
            q_mass += cube
            # ⌊log₂(20D/Δ₊)⌋ + 1 with 20D/Δ₊ = 20d²/(nh - d²) ≥ 1
            level = (EXCESS_WINDOW * d * d // (n * h - d * d)).bit_length()
            members.setdefault(level, []).append((u, v))
            masses[level] = masses.get(level, Fraction(0)) + cube
    return D, q_mass, members, masses


def _remove_sample(g, level_members, p, seed, draw):
    """Per-vertex bitmask of removed (u, v) for one draw of S' ⊆ S_i."""
    rng = make_rng(seed, 'trim', draw)
    keep = rng.random(len(level_members)) < float(p)
    removed = [0] * g.n
    for (u, v), chosen in zip(level_members, keep):
        if chosen:
            removed[u] |= 1 << v
    return removed


def _fallback(g, tag, params=None):
    cut = improve_cut(g, combine_cuts(g, [], []))
    log.info("codegree_trimming_cut fallback=%s surplus=%s", tag, cut.surplus)
    return TrimmingResult(cut=cut, params=params, tag=tag)


def codegree_trimming_cut(g, seed=0, draws=DEFAULT_DRAWS, trials=None):
    """
    Trim high-codegree directed edges and cut a sparse neighbourhood slice.

    Args:
        g: d-regular Graph (d ≤ n/2 expected; larger d is logged)
        seed: Base seed
        draws: Removal samples S' compared on e_H(T) - |T|²D/(2N)
        trials: Forwarded to sparse_set_cut

    Returns:
        TrimmingResult: tag is 'no_excess_mass' or 'empty_slice' when the
        greedy cut was returned instead

    Raises:
        ParameterError: If g is not regular
    """
    if not g.is_regular():
        raise ParameterError("codegree trimming needs a regular graph")
    if draws < 1:
        raise ParameterError(f"draws ≥ 1 required, got {draws}")
    n, d = g.n, g.max_degree
    if 2 * d > n:
        log.warning("codegree_trimming_cut d=%d > n/2=%.1f", d, n / 2)
    aux_edges = aux_edge_count(g)
    D, q_mass, members, masses = excess_levels(g)
    if q_mass == 0:
        return _fallback(g, 'no_excess_mass')

    level = max(sorted(masses), key=lambda i: (masses[i] * 2 ** i, -i))
    N = n * d
    p = Fraction(1, 2 ** level)
    params = AuxGraphParams(N, D, AUX_CONSTANT, level, p, q_mass, masses[level], len(members[level]))

    best_score, best_removed = None, None
    for draw in range(draws):
        removed = _remove_sample(g, members[level], p, seed, draw)
        size = N - sum(mask.bit_count() for mask in removed)
        edges = sum(g.edges_within(row & ~cut_out) for row, cut_out in zip(g.rows, removed))
        score = edges - Fraction(size * size) * D / (2 * N)
        if best_score is None or score < best_score:
            best_score, best_removed, best_edges, best_size = score, removed, edges, size
    aux_bound = Fraction(best_size * best_size) * D / (2 * N) - AUX_CONSTANT / (D * D) * q_mass

    slices = [(w, g.rows[w] & ~best_removed[w]) for w in range(n)]
    slices = [(w, mask) for w, mask in slices if mask]
    if not slices:
        return _fallback(g, 'empty_slice', params)
    w, s_mask = max(slices, key=lambda item: (sparse_set_target(g, item[1]), -item[0]))

    size = s_mask.bit_count()
    slack = 2 * AUX_CONSTANT * n / d ** 4 * (q_mass / 2)
    holds = g.edges_within(s_mask) <= Fraction(size * size * d, 2 * n) - slack

    sparse = sparse_set_cut(g, s_mask, seed=seed, trials=trials)
    log.info("codegree_trimming_cut e(H)=%d level=%d level_size=%d level_ok=%s w=%d |S|=%d "
             "aux_ok=%s inequality=%s surplus=%s",
             aux_edges, level, params.level_size, params.level_inequality, w, size,
             best_edges <= aux_bound, holds, sparse.surplus)
    return TrimmingResult(
        cut=sparse.cut,
        params=params,
        w=w,
        S=s_mask,
        target=sparse.target,
        aux_inequality=best_edges <= aux_bound,
        inequality_holds=holds,
        sparse=sparse,
    )
