"""
Single-vertex-flip hill climbing for MaxCut.

A cut is locally optimal when no single flip increases the crossing; then
every vertex has at least half of its edges crossing, so crossing ≥ m/2.
"""

import logging

import numpy as np

from lib.graph import Cut
from lib.utils.seeding import make_rng

from .exact import OracleResult

log = logging.getLogger(__name__)


def _climb(adjacency, side):
    """Flip the best positive-gain vertex (lowest index on ties) until none is left."""
    spins = 1 - 2 * np.asarray(side, dtype=np.int64)
    field = adjacency @ spins
    while True:
        gains = spins * field
        v = int(np.argmax(gains))
        if gains[v] <= 0:
            break
        spins[v] = -spins[v]
        field += 2 * spins[v] * adjacency[:, v]
    return ((1 - spins) // 2).astype(np.int64)


def improve_cut(g, cut):
    """
    Hill-climb from an existing cut.

    Args:
        g: Graph
        cut: Starting Cut of g

    Returns:
        Cut: Locally optimal cut with crossing ≥ cut.crossing
    """
    if g.m == 0:
        return cut
    return Cut.from_sides(g, _climb(g.adjacency_matrix, cut.side))


def local_search(g, seed, restarts=16):
    """
    Best locally optimal cut over random restarts.

    Args:
        g: Graph
        seed: Seed for the start assignments
        restarts: Number of random starts

    Returns:
        OracleResult: exact=False, method 'local_search_lower_bound'
    """
    best = Cut.trivial(g)
    if g.m > 0:
        adjacency = g.adjacency_matrix
        for attempt in range(max(1, restarts)):
            rng = make_rng(seed, 'local_search', attempt)
            side = _climb(adjacency, rng.integers(0, 2, size=g.n))
            candidate = Cut.from_sides(g, side)
            if candidate.crossing > best.crossing or attempt == 0:
                best = candidate
    log.debug("local_search n=%d m=%d restarts=%d crossing=%d", g.n, g.m, restarts, best.crossing)
    return OracleResult(best.crossing, best, 'local_search_lower_bound', False)
