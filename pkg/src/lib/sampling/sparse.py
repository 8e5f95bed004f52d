"""
Cuts from a sparse vertex set of a regular graph.

A random T ⊆ V with rate |S|/n has E[e(S,T) - e(S) - e(T)] = |S|²d/(2n) - e(S).
Vertices in S ∩ T are then dropped from the side where they have more
neighbours, which never lowers that quantity, and (S | T) is a cut of
G[S ∪ T] with surplus half of it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from lib.graph import Cut, iter_bits, mask_of
from lib.oracle import improve_cut
from lib.structure import combine_cuts, split_cut
from lib.utils.errors import InvariantViolation, ParameterError
from lib.utils.parallel import ordered_map
from lib.utils.seeding import make_rng
from lib.utils.settings import get_settings

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SparseSetResult:
    """
    Attributes:
        cut: Cut of the whole graph
        target: ½(|S|²d/(2n) - e(S)), exact
        best_q: e(S,T) - e(S) - e(T) of the chosen disjoint pair
        s_mask: S after deduplication
        t_mask: T after deduplication
        trials: Number of T draws
    """

    cut: Cut
    target: Fraction
    best_q: int
    s_mask: int
    t_mask: int
    trials: int

    @property
    def surplus(self):
        return self.cut.surplus


def sparse_set_target(g, s_mask):
    """½(|S|²d/(2n) - e(S)) for a d-regular g."""
    size = s_mask.bit_count()
    return Fraction(size * size * g.max_degree, 4 * g.n) - Fraction(g.edges_within(s_mask), 2)


def _q_value(g, s_mask, t_mask):
    return g.edges_between(s_mask, t_mask) - g.edges_within(s_mask) - g.edges_within(t_mask)


def deduplicate(g, s_mask, t_mask):
    """
    Remove every vertex of S ∩ T from one side, ascending.

    A vertex with at least as many neighbours in S as in T leaves S,
    otherwise it leaves T.

    Returns:
        tuple: (S, T) disjoint bitmasks
    """
    q = _q_value(g, s_mask, t_mask)
    for v in iter_bits(s_mask & t_mask):
        if g.degree_into(v, s_mask) >= g.degree_into(v, t_mask):
            s_mask &= ~(1 << v)
        else:
            t_mask &= ~(1 << v)
        updated = _q_value(g, s_mask, t_mask)
        if updated < q:
            raise InvariantViolation(f"removing vertex {v} lowered e(S,T) - e(S) - e(T) from {q} to {updated}")
        q = updated
    return s_mask, t_mask


def _draw(g, s_mask, seed, trial):
    rng = make_rng(seed, 'sparse', trial)
    keep = rng.random(g.n) < s_mask.bit_count() / g.n
    t_mask = mask_of(v for v in range(g.n) if keep[v])
    s_final, t_final = deduplicate(g, s_mask, t_mask)
    return _q_value(g, s_final, t_final), s_final, t_final


def sparse_set_cut(g, S, seed=0, trials=None):
    """
    Cut built from a sparse set S of a regular graph.

    Args:
        g: d-regular Graph
        S: Iterable of vertices or a bitmask
        seed: Base seed
        trials: Number of T draws; defaults to SURPLUS_LAB_TRIALS

    Returns:
        SparseSetResult

    Raises:
        ParameterError: If g is not regular or S is empty
    """
    if not g.is_regular():
        raise ParameterError("sparse set cut needs a regular graph")
    s_mask = S if isinstance(S, int) else mask_of(S)
    if not s_mask:
        raise ParameterError("S must be non-empty")
    trials = trials or get_settings().trials

    draws = ordered_map(lambda t: _draw(g, s_mask, seed, t), range(trials))
    best = 0
    for index, (q, _, _) in enumerate(draws):
        if q > draws[best][0]:
            best = index
    best_q, s_final, t_final = draws[best]

    order, local = split_cut(g, s_final, t_final)
    local = improve_cut(local.graph, local)
    cut = improve_cut(g, combine_cuts(g, [order], [local]))
    if cut.surplus < Fraction(best_q, 2):
        raise InvariantViolation(f"sparse set cut surplus {cut.surplus} < Q/2 = {Fraction(best_q, 2)}")

    target = sparse_set_target(g, s_mask)
    log.info("sparse_set_cut n=%d |S|=%d best_q=%d target=%s surplus=%s",
             g.n, s_mask.bit_count(), best_q, target, cut.surplus)
    return SparseSetResult(cut, target, best_q, s_final, t_final, trials)
