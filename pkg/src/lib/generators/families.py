"""
Graph families used as test inputs: random graphs, Paley and polarity graphs,
blow-ups and a few classical small graphs.

Random families draw from numpy PCG64 streams keyed by (seed, family), so the
same call always returns the same edge set.
"""

import itertools

import networkx as nx
import numpy as np
from sympy import factorint, isprime

from lib.graph import Graph, iter_bits
from lib.utils.errors import GeneratorError
from lib.utils.seeding import make_rng

PALEY_MAX_Q = 10_000
POLARITY_MAX_Q = 101


def _check_probability(p):
    if not 0.0 <= p <= 1.0:
        raise GeneratorError(f"edge probability must lie in [0, 1], got {p}")


def gnp(n, p, seed):
    """
    Erdős–Rényi graph G(n, p).

    Pairs (u, v), u < v, are visited in row-major order and each keeps its
    edge when its uniform draw is below p.

    Raises:
        GeneratorError: If n < 1 or p is outside [0, 1]
    """
    if n < 1:
        raise GeneratorError(f"gnp needs at least one vertex, got n = {n}")
    _check_probability(p)
    rng = make_rng(seed, 'gnp', n)
    upper_u, upper_v = np.triu_indices(n, 1)
    keep = rng.random(upper_u.size) < p
    matrix = np.zeros((n, n), dtype=bool)
    matrix[upper_u[keep], upper_v[keep]] = True
    matrix |= matrix.T
    return Graph.from_adjacency_matrix(matrix)


def bipartite_random(n1, n2, p, seed):
    """Random bipartite graph between parts 0..n1-1 and n1..n1+n2-1."""
    if n1 < 1 or n2 < 1:
        raise GeneratorError(f"both parts need a vertex, got ({n1}, {n2})")
    _check_probability(p)
    rng = make_rng(seed, 'bipartite_random', n1, n2)
    keep = rng.random((n1, n2)) < p
    matrix = np.zeros((n1 + n2, n1 + n2), dtype=bool)
    matrix[:n1, n1:] = keep
    matrix |= matrix.T
    return Graph.from_adjacency_matrix(matrix)


def triangle_free_random(n, p, seed):
    """
    G(n, p) followed by greedy triangle breaking: for triangles a < b < c in
    lexicographic order, the edge ab is deleted while the triangle survives.
    """
    rows = list(gnp(n, p, seed).rows)
    for a in range(n):
        for b in iter_bits(rows[a] >> (a + 1) << (a + 1)):
            if not (rows[a] >> b) & 1:
                continue
            if rows[a] & rows[b] >> (b + 1) << (b + 1):
                rows[a] &= ~(1 << b)
                rows[b] &= ~(1 << a)
    return Graph(n, tuple(rows))


def paley(q):
    """
    Paley graph on Z_q: uv is an edge iff u - v is a non-zero square mod q.

    Examples:
        q = 5 → C_5
        q = 13 → srg(13, 6, 2, 3)

    Raises:
        GeneratorError: Unless q is a prime ≡ 1 (mod 4) and q ≤ 10^4
    """
    if not isinstance(q, int) or q > PALEY_MAX_Q or not isprime(q) or q % 4 != 1:
        raise GeneratorError(f"paley needs a prime q ≡ 1 (mod 4) up to {PALEY_MAX_Q}, got {q}")
    residues = {x * x % q for x in range(1, q)}
    base = 0
    for r in residues:
        base |= 1 << r
    full = (1 << q) - 1
    rows = tuple(((base << u) | (base >> (q - u))) & full for u in range(q))
    return Graph(q, rows)


def projective_points(q):
    """Points of PG(2, q) as triples whose first non-zero coordinate is 1, lexicographic."""
    points = []
    for triple in itertools.product(range(q), repeat=3):
        leading = next((x for x in triple if x), None)
        if leading == 1:
            points.append(triple)
    return points


def polarity(q):
    """
    Polarity graph of PG(2, q) for prime q: x ~ y iff x·y ≡ 0 (mod q), x ≠ y.

    Absolute points (x·x ≡ 0) lose their loop and end with degree q.

    Raises:
        GeneratorError: Unless q is prime and q ≤ 101
    """
    if not isinstance(q, int) or q < 2 or q > POLARITY_MAX_Q:
        raise GeneratorError(f"polarity needs 2 ≤ q ≤ {POLARITY_MAX_Q}, got {q}")
    if not isprime(q):
        if len(factorint(q)) == 1:
            raise GeneratorError(f"polarity over prime powers is not supported, got q = {q}")
        raise GeneratorError(f"polarity needs a prime q, got {q}")
    points = np.asarray(projective_points(q), dtype=np.int64)
    n = len(points)
    rows = []
    for start in range(0, n, 512):
        block = (points[start:start + 512] @ points.T) % q == 0
        for offset, row in enumerate(block):
            v = start + offset
            mask = int.from_bytes(np.packbits(row, bitorder='little').tobytes(), 'little')
            rows.append(mask & ~(1 << v))
    return Graph(n, tuple(rows))


def blowup(h, s):
    """
    Replace each vertex x of h by the independent set {x*s, ..., x*s + s - 1}
    and each edge by a complete bipartite join.

    Raises:
        GeneratorError: If s < 1
    """
    if s < 1:
        raise GeneratorError(f"blow-up factor must be at least 1, got {s}")
    block = (1 << s) - 1
    class_rows = []
    for x in range(h.n):
        mask = 0
        for y in iter_bits(h.rows[x]):
            mask |= block << (y * s)
        class_rows.append(mask)
    return Graph(h.n * s, tuple(class_rows[v // s] for v in range(h.n * s)))


def complete(n):
    if n < 1:
        raise GeneratorError(f"complete graph needs n ≥ 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle(n):
    if n < 3:
        raise GeneratorError(f"cycle needs n ≥ 3, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def petersen():
    return Graph.from_networkx(nx.petersen_graph())


def disjoint_union(g, h):
    """g on vertices 0..g.n-1 followed by h shifted by g.n."""
    rows = g.rows + tuple(row << g.n for row in h.rows)
    return Graph(g.n + h.n, rows)
