"""
Tests for the neighbourhood-sampling cuts, sparse-set cuts, codegree
trimming and the K_r-free / C_r-free dispatch pipelines.

Usage:
    python tests/test_sampling.py
    pytest tests/test_sampling.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from fractions import Fraction

import pytest

from lib.generators import blowup, complete, cycle, disjoint_union, gnp, paley, petersen, triangle_free_random
from lib.graph import Graph, clique_count, mask_of
from lib.sampling import (
    aux_edge_count,
    bucket_neighborhood_cut,
    codegree_trimming_cut,
    composite_kr_cut,
    deduplicate,
    excess_levels,
    exclusive_neighborhoods,
    expected_gain_terms,
    kr_recursive_cut,
    odd_cycle_pipeline_cut,
    sparse_set_cut,
    sparse_set_target,
    triangle_sampling_cut,
)
from lib.utils.errors import ParameterError
from lib.vectors import c5_bucket_sets


# Neighbourhood sampling

def test_triangle_sampling_records_every_trial():
    g = petersen()
    result = triangle_sampling_cut(g, seed=2, trials=12)
    result.cut.validate()
    assert result.trials == 12
    assert [record.trial for record in result.records] == list(range(12))
    for record in result.records:
        assert record.surplus >= Fraction(record.gain, 2)
    assert result.surplus == max(record.surplus for record in result.records)


def test_triangle_sampling_is_deterministic():
    g = gnp(30, 0.2, 1)
    first = triangle_sampling_cut(g, seed=5, trials=8)
    second = triangle_sampling_cut(g, seed=5, trials=8)
    assert first.cut == second.cut
    assert first.xyz == second.xyz


def test_triangle_sampling_preconditions():
    with pytest.raises(ParameterError):
        triangle_sampling_cut(Graph.from_edges(10, [(0, 1)]), trials=2)
    with pytest.raises(ParameterError):
        triangle_sampling_cut(petersen(), C=0.5, trials=2)


def test_bucket_sampling_on_petersen():
    g = petersen()
    sets = c5_bucket_sets(g, 1)
    result = bucket_neighborhood_cut(g, sets, seed=1, trials=10)
    result.cut.validate()
    assert len(result.records) == 10
    terms = expected_gain_terms(g, sets, result.plan)
    assert all(term >= 0 for term in terms)


def test_bucket_sampling_rejects_empty_sets():
    g = petersen()
    with pytest.raises(ParameterError):
        bucket_neighborhood_cut(g, c5_bucket_sets(g, 2), trials=2)


# Sparse sets

def test_sparse_set_target():
    assert sparse_set_target(cycle(4), mask_of([0, 2])) == Fraction(1, 2)
    assert sparse_set_target(cycle(4), mask_of([0, 1])) == Fraction(1, 2) - Fraction(1, 2)


def test_deduplicate_separates_sets():
    g = gnp(20, 0.3, 2)
    s_mask, t_mask = mask_of(range(0, 12)), mask_of(range(6, 20))
    s_final, t_final = deduplicate(g, s_mask, t_mask)
    assert not s_final & t_final
    assert s_final | t_final == s_mask | t_mask
    before = g.edges_between(s_mask, t_mask) - g.edges_within(s_mask) - g.edges_within(t_mask)
    after = g.edges_between(s_final, t_final) - g.edges_within(s_final) - g.edges_within(t_final)
    assert after >= before


def test_sparse_set_cut_on_regular_graph():
    g = paley(13)
    result = sparse_set_cut(g, [0, 2, 5, 7], seed=3, trials=10)
    result.cut.validate()
    assert not result.s_mask & result.t_mask
    assert result.surplus >= Fraction(result.best_q, 2)
    assert result.target == sparse_set_target(g, mask_of([0, 2, 5, 7]))


def test_sparse_set_cut_preconditions():
    with pytest.raises(ParameterError):
        sparse_set_cut(Graph.from_edges(3, [(0, 1), (1, 2)]), [0])
    with pytest.raises(ParameterError):
        sparse_set_cut(paley(13), [])


# Codegree trimming

@pytest.mark.parametrize('g, triangles', [(complete(4), 4), (blowup(complete(3), 3), 27)])
def test_aux_edge_count_is_three_triangles(g, triangles):
    assert aux_edge_count(g) == 3 * triangles


def test_trimming_without_excess_codegree_falls_back():
    # paley(13): every edge has codegree 2 < D = 36/13
    g = paley(13)
    _, q_mass, _, _ = excess_levels(g)
    assert q_mass == 0
    result = codegree_trimming_cut(g, seed=0, draws=4)
    assert result.fallback and result.tag == 'no_excess_mass'
    assert result.params is None
    assert result.surplus >= 0


def test_trimming_on_disjoint_cliques():
    # K4 + K4: D = 9/8, every directed edge has codegree 2 at level 5
    g = disjoint_union(complete(4), complete(4))
    D, q_mass, members, masses = excess_levels(g)
    assert D == Fraction(9, 8)
    assert list(members) == [5] and len(members[5]) == 24
    assert q_mass == 24 * Fraction(7, 8) ** 3
    result = codegree_trimming_cut(g, seed=1, draws=8, trials=6)
    assert not result.fallback
    assert result.params.level == 5
    assert result.params.p == Fraction(1, 32)
    assert result.params.level_inequality
    assert result.S and not result.S & ~g.rows[result.w]
    assert result.surplus >= Fraction(result.sparse.best_q, 2)
    result.cut.validate()


def test_trimming_preconditions():
    with pytest.raises(ParameterError):
        codegree_trimming_cut(Graph.from_edges(3, [(0, 1), (1, 2)]))
    with pytest.raises(ParameterError):
        codegree_trimming_cut(petersen(), draws=0)


# K_r-free graphs

def test_exclusive_neighborhoods():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert exclusive_neighborhoods(star, [0, 1]) == [[1, 2, 3], [0]]
    assert exclusive_neighborhoods(star, [0, 0]) == [[], []]


def test_kr_triangle_base_case():
    g = triangle_free_random(30, 0.4, 1)
    result = kr_recursive_cut(g, 3, seed=1, trials=6)
    result.cut.validate()
    assert (result.r, result.depth) == (3, 0)
    assert result.branch in ('triangle', 'greedy', 'empty')


def test_kr_recursion_on_k4_free_graph():
    g = blowup(complete(3), 3)
    assert clique_count(g, 4) == 0
    result = kr_recursive_cut(g, 4, seed=2, restarts=2, trials=4)
    result.cut.validate()
    assert result.r == 4
    assert result.branch in ('recursion', 'triangle', 'regularize_cut', 'greedy')
    assert kr_recursive_cut(g, 4, seed=2, restarts=2, trials=4).cut == result.cut


def test_composite_kr_cut():
    g = blowup(complete(3), 3)
    result = composite_kr_cut(g, 4, seed=0, trials=4)
    result.cut.validate()
    assert result.surplus >= 0
    assert result.branch in result.candidates
    assert composite_kr_cut(Graph.empty(5), 4).branch == 'empty'


def test_composite_degenerate_side_uses_sampling(monkeypatch):
    # C30: m = 30 and d = 30^0.4 > 2, so every vertex is peeled into S
    import lib.sampling.cliques as cliques

    calls = []
    original = cliques.triangle_sampling_cut

    def spy(g, **kwargs):
        calls.append(g.n)
        return original(g, **kwargs)

    def no_recursion(*args, **kwargs):
        raise AssertionError("kr_recursive_cut ran on the degenerate side")

    monkeypatch.setattr(cliques, 'triangle_sampling_cut', spy)
    monkeypatch.setattr(cliques, 'kr_recursive_cut', no_recursion)
    g = cycle(30)
    result = composite_kr_cut(g, 3, seed=0, trials=4)
    result.cut.validate()
    assert result.partition.T == ()
    assert 'degenerate' in result.candidates
    assert result.degenerate_method == 'triangle_sampling'
    assert calls == [30]

    result = composite_kr_cut(g, 4, seed=0, trials=4)
    assert result.degenerate_method in ('triangle_sampling', 'degenerate_vectors')
    assert calls == [30, 30]


@pytest.mark.parametrize('call', [kr_recursive_cut, composite_kr_cut])
def test_clique_cuts_reject_small_r(call):
    with pytest.raises(ParameterError):
        call(petersen(), 2)


# Odd cycles

def test_odd_cycle_r3_uses_composite():
    result = odd_cycle_pipeline_cut(triangle_free_random(24, 0.3, 2), 3, seed=0, trials=4)
    assert result.branch.startswith('composite:')
    assert result.surplus >= 0


@pytest.mark.parametrize('r', [1, 4, 6])
def test_odd_cycle_rejects_bad_r(r):
    with pytest.raises(ParameterError):
        odd_cycle_pipeline_cut(petersen(), r)


def test_odd_cycle_pipeline_on_c5_free_graph():
    # the shortest odd cycle of a C7 blowup has length 7
    g = blowup(cycle(7), 2)
    result = odd_cycle_pipeline_cut(g, 5, seed=1, trials=4)
    result.cut.validate()
    assert result.surplus >= 0
    assert result.branch in result.candidates
    assert not set(result.skipped) & set(result.candidates)


def test_odd_cycle_pipeline_on_empty_graph():
    result = odd_cycle_pipeline_cut(Graph.empty(4), 5)
    assert result.branch == 'empty' and result.surplus == 0


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
