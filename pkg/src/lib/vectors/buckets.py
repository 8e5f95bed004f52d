"""
Codegree-bucket vectors.

For the C5 family, S(v) holds the vertices u ≠ v with s ≤ d(u, v) < 2s and

    x^v_u = -1/√d·[u ∈ N(v)] + √s/d·[u ∈ S(v)].

For odd cycles the S/T sets come from a good-path profile and

    x^u_w = -(s'/d^(q-1))^(1/2)  for w ∈ T(u),
    x^u_w =  (s/d^q)^(1/2)       for w ∈ S(u),

zero elsewhere; vertices outside the last two layers get the zero vector
until augment_with_identity adds their identity coordinate.
"""

import math

import numpy as np

from lib.graph import iter_bits
from lib.rounding import VectorAssignment, store_rows
from lib.utils.errors import ParameterError

from .params import BucketSets


def c5_bucket_sets(g, s):
    """
    S(v) for the codegree window [s, 2s) on a regular graph.

    Raises:
        ParameterError: Non-regular input or s < 1
    """
    if not g.is_regular() or g.max_degree < 1:
        raise ParameterError("bucket vectors need a regular graph with d ≥ 1")
    if s < 1:
        raise ParameterError(f"bucket base s ≥ 1 required, got {s}")
    rows = g.rows
    sets = []
    paths = 0
    for v in range(g.n):
        reach = 0
        for w in iter_bits(rows[v]):
            reach |= rows[w]
        reach &= ~(1 << v)
        mask = 0
        for u in iter_bits(reach):
            value = (rows[u] & rows[v]).bit_count()
            if s <= value < 2 * s:
                mask |= 1 << u
                paths += value
        sets.append(mask)
    d = g.max_degree
    nu = paths / (g.n * d * d) if d else 0.0
    return BucketSets(s=s, s_prime=None, S=tuple(sets), T=(0,) * g.n, q=2, nu=nu)


def c5_bucket_vectors(g, s):
    """x^v = -1/√d on N(v) plus √s/d on S(v)."""
    sets = c5_bucket_sets(g, s)
    d = g.max_degree
    matrix = -g.adjacency_matrix / math.sqrt(d)
    weight = math.sqrt(s) / d
    for v, mask in enumerate(sets.S):
        for u in iter_bits(mask):
            matrix[v, u] += weight
    return VectorAssignment(store_rows(matrix), 'c5-bucket')


def c5_inner_product(g, sets, u, v):
    """
    ⟨x^u, x^v⟩ = |N∩N|/d + |S∩S|s/d² - (|N(u)∩S(v)| + |S(u)∩N(v)|)√s/d^(3/2).
    """
    d = g.max_degree
    s = sets.s
    rows, S = g.rows, sets.S
    return ((rows[u] & rows[v]).bit_count() / d
            + (S[u] & S[v]).bit_count() * s / d ** 2
            - ((rows[u] & S[v]).bit_count() + (S[u] & rows[v]).bit_count()) * math.sqrt(s) / d ** 1.5)


def _resolve_sets(prof, q):
    if isinstance(prof, BucketSets):
        return prof
    from lib.structure.good_paths import st_sets
    return st_sets(prof, prof.q if q is None else q)


def odd_cycle_st_vectors(g, prof, q=None):
    """
    S/T vectors of a good-path profile at level q.

    Args:
        g: Graph the profile was built on
        prof: GoodPathProfile (or BucketSets already built from one)
        q: Working level; defaults to the profile's level

    Returns:
        VectorAssignment: may contain zero rows; augment before rounding
    """
    sets = _resolve_sets(prof, q)
    d = float(g.average_degree)
    t_weight = -math.sqrt(sets.s_prime / d ** (sets.q - 1))
    s_weight = math.sqrt(sets.s / d ** sets.q)
    matrix = np.zeros((g.n, g.n))
    for u in range(g.n):
        for w in iter_bits(sets.T[u]):
            matrix[u, w] = t_weight
        for w in iter_bits(sets.S[u]):
            matrix[u, w] = s_weight
    return VectorAssignment(store_rows(matrix), 'odd-cycle-st')


def odd_cycle_inner_product(g, sets, u, v):
    """
    (a_uv, b_uv) with ⟨x^u, x^v⟩ = -a_uv + b_uv:
        a = (|T(u)∩S(v)| + |S(u)∩T(v)|)·(s s')^(1/2)/d^(q-1/2)
        b = |T(u)∩T(v)|·s'/d^(q-1) + |S(u)∩S(v)|·s/d^q
    """
    d = float(g.average_degree)
    q, s, s_prime = sets.q, sets.s, sets.s_prime
    S, T = sets.S, sets.T
    a = (((T[u] & S[v]).bit_count() + (S[u] & T[v]).bit_count())
         * math.sqrt(s * s_prime) / d ** (q - 0.5))
    b = ((T[u] & T[v]).bit_count() * s_prime / d ** (q - 1)
         + (S[u] & S[v]).bit_count() * s / d ** q)
    return a, b
