"""Parameter types for the explicit vector families."""

import math
from dataclasses import dataclass
from fractions import Fraction

from lib.graph import iter_bits
from lib.utils.errors import ParameterError

MAX_DENSITY = 0.99


@dataclass(frozen=True)
class RegularVectorParams:
    """
    Scale γ and graph size for the regular-graph vectors.

    Attributes:
        gamma: Scale in (0, 1]
        d: Degree
        n: Vertex count
    """

    gamma: float
    d: int
    n: int

    def __post_init__(self):
        if not 0 < self.gamma <= 1:
            raise ParameterError(f"0 < gamma ≤ 1 required, got {self.gamma}")
        if not 1 <= self.d < self.n:
            raise ParameterError(f"1 ≤ d < n required, got d = {self.d}, n = {self.n}")

    @classmethod
    def for_graph(cls, g, gamma):
        if not g.is_regular():
            raise ParameterError("regular vectors need a regular graph")
        return cls(gamma, g.max_degree, g.n)

    @property
    def a(self):
        return math.sqrt(self.d) / (self.n - self.d)

    @property
    def norm_squared(self):
        """‖x^v‖² = (1 + γa)² + γ² + (n - d - 1)γ²a²."""
        g, a = self.gamma, self.a
        return (1 + g * a) ** 2 + g * g + (self.n - self.d - 1) * g * g * a * a

    def check_density(self):
        if self.d > MAX_DENSITY * self.n:
            raise ParameterError(f"d ≤ 0.99 n required, got d = {self.d}, n = {self.n}")

    def check_signed_range(self):
        if self.gamma > 0.1:
            raise ParameterError(f"gamma ≤ 1/10 required, got {self.gamma}")
        if 2 * self.d > self.n:
            raise ParameterError(f"d ≤ n/2 required, got d = {self.d}, n = {self.n}")


@dataclass(frozen=True)
class SrgParams:
    """
    Strongly regular parameters srg(n, d, eta, mu).

    The triangle surplus s = t - d³/6 follows from t = n d eta / 6.
    """

    n: int
    d: int
    eta: int
    mu: int

    def __post_init__(self):
        lhs = self.n * Fraction(self.d * (self.d - 1), 2)
        rhs = (Fraction(self.n * self.d, 2) * self.eta
               + (Fraction(self.n * (self.n - 1), 2) - Fraction(self.n * self.d, 2)) * self.mu)
        if lhs != rhs:
            raise ParameterError(
                f"n·C(d,2) = (nd/2)·eta + (C(n,2) - nd/2)·mu fails for "
                f"srg({self.n}, {self.d}, {self.eta}, {self.mu})"
            )

    @property
    def triangles(self):
        return Fraction(self.n * self.d * self.eta, 6)

    @property
    def s(self):
        return self.triangles - Fraction(self.d ** 3, 6)

    @classmethod
    def from_graph(cls, g):
        """
        Read (eta, mu) off a graph by scanning every pair.

        Raises:
            ParameterError: If g is not strongly regular
        """
        if not g.is_regular():
            raise ParameterError("graph is not regular, hence not strongly regular")
        adjacent, non_adjacent = set(), set()
        for u in range(g.n):
            for v in range(u + 1, g.n):
                value = (g.rows[u] & g.rows[v]).bit_count()
                (adjacent if (g.rows[u] >> v) & 1 else non_adjacent).add(value)
        if len(adjacent) != 1 or len(non_adjacent) != 1:
            raise ParameterError(
                f"codegrees are not constant per adjacency class: "
                f"adjacent {sorted(adjacent)}, non-adjacent {sorted(non_adjacent)}"
            )
        return cls(g.n, g.max_degree, adjacent.pop(), non_adjacent.pop())


@dataclass(frozen=True)
class GammaChoice:
    gamma: float
    regime: str
    inner_product_bound: float


@dataclass(frozen=True)
class BucketSets:
    """
    Per-vertex S(v) (and T(v)) sets as bitmasks, with their dyadic bases.

    Attributes:
        s: Base of the S window
        s_prime: Base of the T window (None when T is unused)
        S: Tuple of bitmasks, S[v] is S(v)
        T: Tuple of bitmasks (all zero when unused)
        q: Walk length the sets were built for
        nu: Density of the selected bucket
    """

    s: int
    s_prime: int | None
    S: tuple
    T: tuple
    q: int = 2
    nu: float = 1.0

    def __post_init__(self):
        for v, (s_mask, t_mask) in enumerate(zip(self.S, self.T)):
            if s_mask & t_mask:
                raise ParameterError(f"S({v}) and T({v}) intersect")

    @property
    def n(self):
        return len(self.S)

    def members(self, v):
        return list(iter_bits(self.S[v]))

    def is_empty(self):
        return not any(self.S)
