"""
Counting primitives: degrees, codegrees, walks, triangles, cliques, C5 homomorphisms.

All functions are pure and work on an immutable Graph, so they are safe to
call from several threads at once.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lib.utils.errors import GraphError, WalkCountOverflow

from .graph import iter_bits

INT64_MAX = (1 << 63) - 1


@dataclass(frozen=True)
class DegreeStats:
    minimum: int
    maximum: int
    average: Fraction

    @property
    def average_float(self):
        return float(self.average)


def degree_stats(g):
    """
    Minimum, maximum and exact average degree.

    Examples:
        K_4 → (3, 3, 3)
        star K_{1,3} → (1, 3, 3/2)

    Raises:
        GraphError: If the graph has no vertices
    """
    if g.n < 1:
        raise GraphError("degree statistics need at least one vertex")
    return DegreeStats(g.min_degree, g.max_degree, g.average_degree)


def codegree(g, u, v):
    """|N(u) ∩ N(v)| for distinct u, v."""
    if u == v:
        raise GraphError("codegree needs two distinct vertices")
    return (g.rows[u] & g.rows[v]).bit_count()


def walk_vector(g, u, j):
    """
    Walk counts of length j from u to every vertex, as exact integers.

    Raises:
        WalkCountOverflow: If any count exceeds 2^63 - 1
    """
    if j < 0:
        raise GraphError(f"walk length must be non-negative, got {j}")
    counts = [0] * g.n
    counts[u] = 1
    for _ in range(j):
        counts = [sum(counts[x] for x in iter_bits(g.rows[w])) for w in range(g.n)]
        if max(counts, default=0) > INT64_MAX:
            raise WalkCountOverflow(f"walk counts from {u} exceed 2^63-1 at length {j}")
    return counts


def walk_count(g, u, v, j):
    """
    Number of walks of length j from u to v.

    Examples:
        K_3, u = v, j = 3 → 2
        C_4, opposite pair, j = 2 → 2
        any graph, u = v, j = 0 → 1
    """
    return walk_vector(g, u, j)[v]


def walk_matrix(g, j):
    """
    Dense int64 matrix of walk counts of length j.

    Raises:
        WalkCountOverflow: If Δ^j could exceed 2^62
    """
    if j < 0:
        raise GraphError(f"walk length must be non-negative, got {j}")
    if g.max_degree ** j > 1 << 62:
        raise WalkCountOverflow(f"Δ^{j} = {g.max_degree ** j} exceeds the int64 guard")
    return np.linalg.matrix_power(g.adjacency_matrix, j)


def closed_walk_count(g, j):
    """trace(A^j) by summing walk_count(u, u, j)."""
    return sum(walk_vector(g, u, j)[u] for u in range(g.n))


def triangle_count(g):
    """Exact number of triangles."""
    rows = g.rows
    total = 0
    for u in range(g.n):
        for v in iter_bits(rows[u] >> (u + 1) << (u + 1)):
            total += (rows[u] & rows[v] >> (v + 1) << (v + 1)).bit_count()
    return total


def triangle_surplus(g):
    """s = t(G) - d^3/6 with d the average degree."""
    d = float(g.average_degree)
    return triangle_count(g) - d ** 3 / 6


def clique_count(g, r):
    """
    Number of r-cliques, by ordered expansion over forward neighbourhoods.

    Examples:
        K_5, r = 4 → 5
        Petersen, r = 3 → 0

    Raises:
        GraphError: If r < 2
    """
    if r < 2:
        raise GraphError(f"clique size must be at least 2, got {r}")
    if r > g.n:
        return 0
    forward = [row >> (v + 1) << (v + 1) for v, row in enumerate(g.rows)]

    def extend(candidates, size):
        if size == r - 1:
            return candidates.bit_count()
        return sum(extend(candidates & forward[w], size + 1) for w in iter_bits(candidates))

    return sum(extend(forward[v], 1) for v in range(g.n))


def hom_count_c5(g):
    """Homomorphisms C_5 → G, i.e. trace(A^5)."""
    return closed_walk_count(g, 5)


def two_path_count(g):
    """Unordered 2-paths u-v-w (u < w): Σ_v C(d(v), 2)."""
    return sum(d * (d - 1) // 2 for d in g.degrees)


def degeneracy_order(g):
    """
    Minimum-degree peeling.

    Returns:
        tuple: (degeneracy, elimination order); ties go to the lowest index

    Examples:
        tree → 1
        K_n → n - 1
    """
    current = list(g.degrees)
    removed = [False] * g.n
    heap = [(d, v) for v, d in enumerate(current)]
    heapq.heapify(heap)
    order = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != current[v]:
            continue
        removed[v] = True
        order.append(v)
        degeneracy = max(degeneracy, d)
        for u in iter_bits(g.rows[v]):
            if not removed[u]:
                current[u] -= 1
                heapq.heappush(heap, (current[u], u))
    return degeneracy, tuple(order)
