"""
Vectors for regular graphs.

x^v has 1 + γa at v, -γ/√d on N(v) and γa elsewhere (a = √d/(n-d)); on an
edge, ⟨x^u, x^v⟩ = -2γ/√d + γ²(1/d + 2a/√d + a²)·δ(u, v) with
δ(u, v) = d(u, v) - d²/n. The signed variant flips the sign of neighbour
coordinates on edges whose codegree exceeds 20d²/n, one fair coin per
ordered pair.
"""

import logging
import math
from fractions import Fraction

import numpy as np

from lib.graph import iter_bits
from lib.rounding import VectorAssignment, edge_cosines, store_rows
from lib.utils.errors import ParameterError
from lib.utils.seeding import coin

from .params import GammaChoice, MAX_DENSITY, RegularVectorParams

log = logging.getLogger(__name__)

DEFAULT_GAMMA_SCALE = 1e-6


def _check_graph(g, p):
    if not g.is_regular() or g.max_degree != p.d or g.n != p.n:
        raise ParameterError(f"graph must be {p.d}-regular on {p.n} vertices")
    p.check_density()


def _regular_matrix(g, p):
    gamma, a = p.gamma, p.a
    matrix = np.full((g.n, g.n), gamma * a)
    matrix[np.diag_indices(g.n)] += 1.0
    matrix -= (gamma / math.sqrt(p.d) + gamma * a) * g.adjacency_matrix
    return matrix


def regular_vectors(g, p):
    """
    Build x^v for a d-regular graph.

    Raises:
        ParameterError: Non-regular input, degree mismatch or d > 0.99n
    """
    _check_graph(g, p)
    return VectorAssignment(store_rows(_regular_matrix(g, p)), 'regular')


def regular_edge_inner_product(p, codegree):
    """Closed-form ⟨x^u, x^v⟩ for an edge with the given codegree."""
    gamma, a, d = p.gamma, p.a, p.d
    delta = Fraction(codegree) - Fraction(d * d, p.n)
    return (-2 * gamma / math.sqrt(d)
            + gamma * gamma * (1 / d + 2 * a / math.sqrt(d) + a * a) * float(delta))


def gamma_for_triangle_surplus(n, d, s, scale=DEFAULT_GAMMA_SCALE):
    """
    Three-regime choice of γ from the triangle surplus s.

    Returns:
        GammaChoice: gamma, regime tag and the guaranteed bound on edge inner products

    Examples:
        s = -2 n d^1.5 → gamma = 1
        s = 2 n d^1.5 → gamma = scale / 2
    """
    threshold = n * d ** 1.5
    s = float(s)
    if s < -threshold:
        return GammaChoice(1.0, 'few_triangles', 6 * s / (n * d * d))
    if s <= threshold:
        return GammaChoice(scale, 'balanced', -scale / math.sqrt(d))
    return GammaChoice(threshold * scale / s, 'many_triangles', -n * d * scale / s)


def srg_gamma(p, scale=DEFAULT_GAMMA_SCALE):
    """γ for a strongly regular graph with parameters p (SrgParams)."""
    if p.d > MAX_DENSITY * p.n:
        raise ParameterError(f"d ≤ 0.99 n required, got d = {p.d}, n = {p.n}")
    choice = gamma_for_triangle_surplus(p.n, p.d, p.s, scale)
    log.info("srg_gamma n=%d d=%d s=%s regime=%s gamma=%.3g",
             p.n, p.d, p.s, choice.regime, choice.gamma)
    return choice


def high_codegree_threshold(p):
    return Fraction(20 * p.d * p.d, p.n)


def signed_vectors(g, p, seed):
    """
    Build y^v: x^v with a random sign on each neighbour coordinate whose edge
    has codegree above 20d²/n.

    Raises:
        ParameterError: gamma > 1/10, d > n/2, or non-regular input
    """
    _check_graph(g, p)
    p.check_signed_range()
    matrix = _regular_matrix(g, p)
    threshold = high_codegree_threshold(p)
    step = p.gamma / math.sqrt(p.d)
    flipped = 0
    for v in range(g.n):
        for u in iter_bits(g.rows[v]):
            if (g.rows[u] & g.rows[v]).bit_count() > threshold:
                matrix[v, u] = step if coin(seed, 'signed', v, u) else -step
                flipped += 1
    log.debug("signed_vectors n=%d d=%d randomized_coordinates=%d", g.n, p.d, flipped)
    return VectorAssignment(store_rows(matrix), 'signed')


def signed_gap_bound(g, p):
    """γ n √d / 4 - γ² Σ_{high edges} d(u, v)/(10 d)."""
    threshold = high_codegree_threshold(p)
    high = 0
    for u, v in g.edges():
        value = (g.rows[u] & g.rows[v]).bit_count()
        if value > threshold:
            high += value
    return p.gamma * p.n * math.sqrt(p.d) / 4 - p.gamma ** 2 * high / (10 * p.d)


def arcsin_gap(g, x_assignment, y_assignment):
    """Σ over edges of arcsin(cos_y) - arcsin(cos_x)."""
    return math.fsum(np.arcsin(edge_cosines(g, y_assignment))
                     - np.arcsin(edge_cosines(g, x_assignment)))
