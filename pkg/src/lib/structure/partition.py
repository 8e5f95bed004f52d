"""Degree-threshold partitions and dyadic codegree buckets."""

import logging
from collections import deque
from dataclasses import dataclass

from lib.graph import iter_bits, mask_of
from lib.graph.counting import two_path_count
from lib.utils.errors import InvariantViolation, ParameterError

log = logging.getLogger(__name__)

DEFAULT_BUCKET_EXPONENT = 0.1


@dataclass(frozen=True)
class GoodPartition:
    """
    Vertex partition with G[S] d-degenerate and G[T] of minimum degree ≥ d.

    Attributes:
        S: Peeled vertices, ascending
        T: Remaining vertices (the d-core), ascending
        peel_order: S in the order vertices were removed
        threshold: d
    """

    S: tuple
    T: tuple
    peel_order: tuple
    threshold: float

    @property
    def s_mask(self):
        return mask_of(self.S)

    @property
    def t_mask(self):
        return mask_of(self.T)


def good_partition(g, d):
    """
    Peel vertices with fewer than d neighbours among the unpeeled ones.

    Args:
        g: Graph
        d: Threshold (≥ 0)

    Returns:
        GoodPartition

    Examples:
        K_4, d = 2.5 → S = ∅, T = V
        any graph, d > Δ → S = V, T = ∅
    """
    if d < 0:
        raise ParameterError(f"threshold d ≥ 0 required, got {d}")
    alive = g.full_mask
    queue = deque(v for v in range(g.n) if g.degree(v) < d)
    order = []
    while queue:
        v = queue.popleft()
        if not (alive >> v) & 1 or g.degree_into(v, alive) >= d:
            continue
        alive &= ~(1 << v)
        order.append(v)
        queue.extend(u for u in iter_bits(g.rows[v] & alive) if g.degree_into(u, alive) < d)

    later = g.full_mask
    for v in order:
        later &= ~(1 << v)
        if g.degree_into(v, later) >= d:
            raise InvariantViolation(f"peeled vertex {v} has {g.degree_into(v, later)} ≥ {d} later neighbours")
    for v in iter_bits(alive):
        if g.degree_into(v, alive) < d:
            raise InvariantViolation(f"core vertex {v} has degree {g.degree_into(v, alive)} < {d}")

    log.debug("good_partition d=%.4g peeled=%d core=%d", d, len(order), alive.bit_count())
    return GoodPartition(
        S=tuple(sorted(order)), T=tuple(iter_bits(alive)), peel_order=tuple(order), threshold=d
    )


@dataclass(frozen=True)
class BucketChoice:
    """
    Selected dyadic codegree window [s, 2s) with its 2-path count.

    Attributes:
        s: Window base 2^b
        count: Unordered 2-paths u-v-w with s ≤ d(u, w) < 2s
        counts: Count per bucket index b
        exponent: ε₀ used in the selection
    """

    s: int
    count: int
    counts: dict
    exponent: float

    @property
    def bucket(self):
        return self.s.bit_length() - 1


def dyadic_codegree_bucket(g, exponent=DEFAULT_BUCKET_EXPONENT):
    """
    Bucket 2-paths by ⌊log₂ d(u, w)⌋ of their endpoints and pick the bucket
    maximizing count·s^ε₀; ties go to the smaller s.

    Examples:
        K_{1,3} → s = 1, count = 3
        C_4     → s = 2, count = 4

    Raises:
        ParameterError: If g has no 2-path
    """
    counts = {}
    for _, value in g.codegrees.items():
        b = value.bit_length() - 1
        counts[b] = counts.get(b, 0) + value
    total = two_path_count(g)
    if total == 0:
        raise ParameterError("dyadic bucketing needs at least one path of length 2")
    if sum(counts.values()) != total:
        raise InvariantViolation(f"bucket counts sum to {sum(counts.values())}, expected {total}")
    best = max(sorted(counts), key=lambda b: (counts[b] * 2.0 ** (b * exponent), -b))
    log.debug("dyadic_codegree_bucket s=%d count=%d buckets=%d", 1 << best, counts[best], len(counts))
    return BucketChoice(s=1 << best, count=counts[best], counts=dict(sorted(counts.items())),
                        exponent=exponent)
