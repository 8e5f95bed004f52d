"""
Combining cuts of disjoint induced subgraphs into one cut of the host graph.

Parts are placed one after another; each part keeps or swaps its two sides,
whichever sends more edges to the vertices already placed. Every part then
gains at least half of its edges to earlier parts, so the global surplus is
at least the sum of the part surpluses.
"""

import logging

from lib.graph import Cut, iter_bits, mask_of
from lib.utils.errors import GraphError, InvariantViolation
from lib.utils.seeding import coin

log = logging.getLogger(__name__)


def combine_cuts(g, parts, part_cuts, seed=None):
    """
    Merge per-part cuts into a cut of g.

    Args:
        g: Host graph
        parts: Disjoint vertex collections
        part_cuts: Cut of G[part] for each part (local order = sorted part)
        seed: None for greedy placement, an integer for random orientation

    Returns:
        Cut: Cut of g; with greedy placement its surplus is at least the sum
             of the part surpluses

    Raises:
        GraphError: Overlapping parts or mismatched part cuts
        InvariantViolation: If the greedy surplus guarantee fails
    """
    if len(parts) != len(part_cuts):
        raise GraphError(f"{len(parts)} parts but {len(part_cuts)} part cuts")
    covered = 0
    groups = []
    for part, cut in zip(parts, part_cuts):
        order = sorted(set(part))
        mask = mask_of(order)
        if mask & covered:
            raise GraphError("parts overlap")
        if cut.graph.n != len(order):
            raise GraphError(f"part cut has {cut.graph.n} vertices, part has {len(order)}")
        covered |= mask
        zero = one = 0
        for i, v in enumerate(order):
            if cut.side[i]:
                one |= 1 << v
            else:
                zero |= 1 << v
        groups.append((zero, one))
    for v in iter_bits(g.full_mask & ~covered):
        groups.append((1 << v, 0))

    placed_zero = placed_one = 0
    for index, (zero, one) in enumerate(groups):
        keep = g.edges_between(zero, placed_one) + g.edges_between(one, placed_zero)
        swap = g.edges_between(zero, placed_zero) + g.edges_between(one, placed_one)
        flip = swap > keep if seed is None else bool(coin(seed, 'combine', index))
        if flip:
            zero, one = one, zero
        placed_zero |= zero
        placed_one |= one

    combined = Cut.from_mask(g, placed_one)
    if seed is None:
        floor = sum((cut.surplus for cut in part_cuts), start=0)
        if combined.surplus < floor:
            raise InvariantViolation(
                f"combined surplus {combined.surplus} below part total {floor}"
            )
    return combined


def split_cut(g, side_zero, side_one):
    """
    Cut of G[A ∪ B] putting A on side 0 and B on side 1.

    Args:
        g: Host graph
        side_zero: Bitmask A
        side_one: Bitmask B (disjoint from A)

    Returns:
        tuple: (sorted vertex tuple of A ∪ B, Cut of the induced subgraph)
    """
    if side_zero & side_one:
        raise GraphError("split sides overlap")
    sub, order = g.induced(iter_bits(side_zero | side_one))
    return order, Cut.from_sides(sub, [(side_one >> v) & 1 for v in order])


def lift_cut(g, vertices, local_cut):
    """Extend a cut of G[vertices] to g, placing the remaining vertices greedily."""
    return combine_cuts(g, [vertices], [local_cut])
