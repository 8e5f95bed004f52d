"""
Exact MaxCut for small graphs.

Vertex 0 is pinned to side 0. Up to 24 vertices every assignment is scored:
the last k vertices form a "low" block whose 2^k assignments are evaluated
with one matrix product per batch of prefix assignments. From 25 to 30
vertices a depth-first branch and bound takes over. Among optimal cuts the
lexicographically smallest side vector is returned.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from lib.graph import Cut, iter_bits
from lib.utils.errors import OracleSizeError
from lib.utils.parallel import chunk_ranges, ordered_map

log = logging.getLogger(__name__)

EXACT_MAX_VERTICES = 30
EXHAUSTIVE_MAX_VERTICES = 24
LOW_BLOCK = 16
PREFIX_BATCH = 16


@dataclass(frozen=True)
class OracleResult:
    mc: int
    witness: Cut
    method: str
    exact: bool

    @property
    def surplus(self):
        return Fraction(self.mc) - Fraction(self.witness.graph.m, 2)


def _block_crossings(bits, adjacency):
    """Crossing edges inside a block for each 0/1 row of bits."""
    return bits @ adjacency.sum(axis=1) - ((bits @ adjacency) * bits).sum(axis=1)


def _assignment_bits(indices, width):
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    return (indices[:, None] >> shifts[None, :]) & 1


def _exhaustive(g):
    n = g.n
    k = min(n - 1, LOW_BLOCK)
    p = n - k
    adjacency = g.adjacency_matrix
    a_pp = adjacency[:p, :p]
    a_pl = adjacency[:p, p:]
    a_ll = adjacency[p:, p:]

    low_bits = _assignment_bits(np.arange(1 << k, dtype=np.int64), k)
    low_cut = _block_crossings(low_bits, a_ll)
    prefix_degree = a_pl.sum(axis=0)

    def score(bounds):
        start, stop = bounds
        best_value, best_index = -1, None
        for batch_start in range(start, stop, PREFIX_BATCH):
            hs = np.arange(batch_start, min(stop, batch_start + PREFIX_BATCH), dtype=np.int64)
            # vertex 0 stays on side 0
            prefix_bits = np.concatenate(
                [np.zeros((hs.size, 1), dtype=np.int64), _assignment_bits(hs, p - 1)], axis=1
            )
            prefix_cut = _block_crossings(prefix_bits, a_pp)
            ones = prefix_bits @ a_pl
            totals = (
                (prefix_cut + ones.sum(axis=1))[:, None]
                + (prefix_degree[None, :] - 2 * ones) @ low_bits.T
                + low_cut[None, :]
            )
            row_best = totals.max(axis=1)
            row = int(np.argmax(row_best))
            if row_best[row] > best_value:
                best_value = int(row_best[row])
                best_index = (int(hs[row]), int(np.argmax(totals[row])))
        return best_value, best_index

    ranges = chunk_ranges(1 << (p - 1), 64)
    best_value, best_index = -1, None
    for value, index in ordered_map(score, ranges):
        if value > best_value:
            best_value, best_index = value, index

    h, low = best_index
    side = [0] + [(h >> (p - 1 - j)) & 1 for j in range(1, p)]
    side += [(low >> (k - 1 - i)) & 1 for i in range(k)]
    return Cut.from_sides(g, side)


def _branch_and_bound(g, lower_bound):
    n = g.n
    rows = g.rows
    best = {'value': lower_bound - 1, 'mask': None}

    def visit(v, mask_one, mask_zero, crossing, free_mask, free_edges):
        if v == n:
            if crossing > best['value']:
                best['value'], best['mask'] = crossing, mask_one
            return
        bound = crossing + free_edges
        for u in iter_bits(free_mask):
            bound += max((rows[u] & mask_zero).bit_count(), (rows[u] & mask_one).bit_count())
        if bound <= best['value']:
            return
        rest = free_mask & ~(1 << v)
        rest_edges = free_edges - (rows[v] & rest).bit_count()
        visit(v + 1, mask_one, mask_zero | 1 << v, crossing + (rows[v] & mask_one).bit_count(),
              rest, rest_edges)
        visit(v + 1, mask_one | 1 << v, mask_zero, crossing + (rows[v] & mask_zero).bit_count(),
              rest, rest_edges)

    free = g.full_mask & ~1
    visit(1, 0, 1, 0, free, g.edges_within(free))
    return Cut.from_mask(g, best['mask'])


def max_cut_exact(g):
    """
    Exact maximum cut.

    Examples:
        K_5 → mc = 6
        Petersen → mc = 12

    Raises:
        OracleSizeError: If n > 30
    """
    if g.n > EXACT_MAX_VERTICES:
        raise OracleSizeError(f"exact oracle supports n ≤ {EXACT_MAX_VERTICES}, got n = {g.n}")
    if g.n <= 1 or g.m == 0:
        return OracleResult(0, Cut.trivial(g), 'exhaustive', True)
    if g.n <= EXHAUSTIVE_MAX_VERTICES:
        witness = _exhaustive(g)
        method = 'exhaustive'
    else:
        from .local_search import local_search
        seed_value = local_search(g, seed=0, restarts=32).mc
        witness = _branch_and_bound(g, seed_value)
        method = 'branch_bound'
    log.debug("max_cut_exact n=%d m=%d mc=%d method=%s", g.n, g.m, witness.crossing, method)
    return OracleResult(witness.crossing, witness, method, True)
