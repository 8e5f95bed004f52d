"""
Immutable simple graphs stored as adjacency bitrows.

Every vertex v owns one Python integer whose bit u is set iff uv is an edge.
Set algebra (neighbourhood intersections, edges inside a vertex set) reduces
to `&` and `int.bit_count()`, which keeps the counting kernels short.

Usage:
    from lib.graph import Graph, Cut

    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    cut = Cut.from_sides(g, [0, 1, 0, 1])
    print(cut.crossing, cut.surplus)   # 4 2
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import networkx as nx
import numpy as np

from lib.utils.errors import GraphError, InvariantViolation


def iter_bits(mask):
    """Yield the indices of set bits of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    """Bitmask with the given vertex indices set."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on vertices 0..n-1.

    Attributes:
        n: Vertex count
        rows: Per-vertex adjacency bitrow
    """

    n: int
    rows: tuple

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        for v, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"adjacency is not symmetric for pair ({v}, {u})")

    # Construction

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a graph from an edge iterable; duplicates and reversed pairs collapse.

        Args:
            n: Vertex count
            edges: Iterable of (u, v) pairs

        Returns:
            Graph

        Raises:
            GraphError: On self-loops or out-of-range endpoints
        """
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    @classmethod
    def from_adjacency_matrix(cls, matrix):
        """Build a graph from a symmetric 0/1 matrix (diagonal must be zero)."""
        matrix = np.asarray(matrix) != 0
        n = matrix.shape[0]
        rows = []
        for v in range(n):
            packed = np.packbits(matrix[v], bitorder='little').tobytes()
            rows.append(int.from_bytes(packed, 'little'))
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, nx_graph):
        """Relabel a networkx graph by sorted node order and convert it."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    # Basic queries

    @cached_property
    def degrees(self):
        return tuple(row.bit_count() for row in self.rows)

    @cached_property
    def m(self):
        total = sum(self.degrees)
        if total % 2:
            raise InvariantViolation("degree sum is odd")
        return total // 2

    @cached_property
    def average_degree(self):
        """Exact average degree 2m/n (0 for the null graph)."""
        return Fraction(2 * self.m, self.n) if self.n else Fraction(0)

    @property
    def max_degree(self):
        return max(self.degrees, default=0)

    @property
    def min_degree(self):
        return min(self.degrees, default=0)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def degree(self, v):
        return self.degrees[v]

    def neighbors(self, v):
        return list(iter_bits(self.rows[v]))

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def edges(self):
        """All edges (u, v) with u < v, in lexicographic order."""
        result = []
        for u, row in enumerate(self.rows):
            result.extend((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))
        return result

    def is_regular(self):
        return self.n > 0 and self.min_degree == self.max_degree

    @cached_property
    def edge_array(self):
        """Edges as a (m, 2) int64 array in the order of edges()."""
        pairs = self.edges()
        if not pairs:
            return np.zeros((0, 2), dtype=np.int64)
        return np.asarray(pairs, dtype=np.int64)

    @cached_property
    def adjacency_matrix(self):
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        edges = self.edge_array
        matrix[edges[:, 0], edges[:, 1]] = 1
        matrix[edges[:, 1], edges[:, 0]] = 1
        return matrix

    @cached_property
    def codegrees(self):
        return CodegreeProfile.build(self)

    # Set-level counts

    def degree_into(self, v, mask):
        """Number of neighbours of v inside mask."""
        return (self.rows[v] & mask).bit_count()

    def edges_within(self, mask):
        """e(S) for the vertex set encoded by mask."""
        return sum((self.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def edges_between(self, mask_a, mask_b):
        """Number of pairs (a, b) in A x B with ab an edge; e(A, B) for disjoint sets."""
        return sum((self.rows[a] & mask_b).bit_count() for a in iter_bits(mask_a))

    def induced(self, vertices):
        """
        Induced subgraph on a vertex collection.

        Args:
            vertices: Iterable of vertex indices (order ignored)

        Returns:
            tuple: (Graph, tuple of original indices in ascending order);
                   local vertex i corresponds to original vertex order[i]
        """
        order = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(order)}
        mask = mask_of(order)
        rows = []
        for v in order:
            row = 0
            for u in iter_bits(self.rows[v] & mask):
                row |= 1 << local[u]
            rows.append(row)
        return Graph(len(order), tuple(rows)), order


@dataclass(frozen=True)
class Cut:
    """
    Two-colouring of a graph's vertices.

    Attributes:
        graph: Host graph
        side: Per-vertex side, 0 or 1
    """

    graph: Graph = field(repr=False, compare=False)
    side: tuple

    def __post_init__(self):
        if len(self.side) != self.graph.n:
            raise GraphError(f"cut has {len(self.side)} sides for {self.graph.n} vertices")
        if any(s not in (0, 1) for s in self.side):
            raise GraphError("cut sides must be 0 or 1")

    @classmethod
    def from_sides(cls, graph, side):
        return cls(graph, tuple(int(s) for s in side))

    @classmethod
    def from_mask(cls, graph, mask):
        return cls(graph, tuple((mask >> v) & 1 for v in range(graph.n)))

    @classmethod
    def trivial(cls, graph):
        return cls(graph, (0,) * graph.n)

    @cached_property
    def mask(self):
        """Bitmask of the side-1 vertices."""
        mask = 0
        for v, s in enumerate(self.side):
            if s:
                mask |= 1 << v
        return mask

    @cached_property
    def crossing(self):
        rows = self.graph.rows
        outside = self.graph.full_mask & ~self.mask
        return sum((rows[v] & outside).bit_count() for v in iter_bits(self.mask))

    @property
    def surplus(self):
        """crossing - m/2, exact."""
        return Fraction(self.crossing) - Fraction(self.graph.m, 2)

    @property
    def bitstring(self):
        return ''.join(str(s) for s in self.side)

    def validate(self):
        """Recompute the crossing from scratch and check its range."""
        recomputed = sum(1 for u, v in self.graph.edges() if self.side[u] != self.side[v])
        if recomputed != self.crossing or not 0 <= self.crossing <= self.graph.m:
            raise InvariantViolation(
                f"cut crossing {self.crossing} disagrees with recount {recomputed}"
            )
        return True


class CodegreeProfile:
    """
    Sparse codegree table: d(u, v) for every pair with a common neighbour.

    Pairs with zero codegree are not stored; lookups default to 0.
    """

    def __init__(self, graph, counts):
        self.graph = graph
        self._counts = counts
        d = graph.average_degree
        self.baseline = d * d / graph.n if graph.n else Fraction(0)

    @classmethod
    def build(cls, graph):
        counts = {}
        for w in range(graph.n):
            nbrs = graph.neighbors(w)
            for i, u in enumerate(nbrs):
                for v in nbrs[i + 1:]:
                    counts[(u, v)] = counts.get((u, v), 0) + 1
        return cls(graph, counts)

    def codegree(self, u, v):
        if u == v:
            raise GraphError("codegree needs two distinct vertices")
        key = (u, v) if u < v else (v, u)
        return self._counts.get(key, 0)

    def delta(self, u, v):
        """d(u, v) - d^2/n as an exact Fraction."""
        return self.codegree(u, v) - self.baseline

    def delta_plus(self, u, v):
        return max(self.delta(u, v), Fraction(0))

    def items(self):
        """((u, v), d(u, v)) for stored pairs, u < v, sorted."""
        return sorted(self._counts.items())

    def __len__(self):
        return len(self._counts)
