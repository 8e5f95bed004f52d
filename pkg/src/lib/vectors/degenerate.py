"""
Vectors for D-degenerate graphs.

With a degeneracy elimination order, every vertex has at most D neighbours
removed after it (its forward neighbours N⁺(v)). Set

    x^v = e_v - γ/√D · Σ_{u ∈ N⁺(v)} e_u,

so ‖x^v‖² ≤ 1 + γ² and, on an edge, ⟨x^u, x^v⟩ = -γ/√D + γ²|N⁺(u) ∩ N⁺(v)|/D.
"""

import math

import numpy as np

from lib.graph import degeneracy_order
from lib.rounding import VectorAssignment, store_rows
from lib.utils.errors import ParameterError


def degenerate_vectors(g, gamma=0.5):
    """
    Build forward-neighbour vectors from the degeneracy order of g.

    Raises:
        ParameterError: If gamma is outside (0, 1]
    """
    if not 0 < gamma <= 1:
        raise ParameterError(f"0 < gamma ≤ 1 required, got {gamma}")
    degeneracy, order = degeneracy_order(g)
    position = np.empty(g.n, dtype=np.int64)
    position[list(order)] = np.arange(g.n)
    matrix = np.eye(g.n)
    if degeneracy > 0:
        step = gamma / math.sqrt(degeneracy)
        for u, v in g.edges():
            first, later = (u, v) if position[u] < position[v] else (v, u)
            matrix[first, later] -= step
    return VectorAssignment(store_rows(matrix), 'degenerate')
