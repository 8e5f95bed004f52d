"""
Tests for the explicit vector families: closed-form inner products against
direct dot products, parameter validation and the γ regimes.

Usage:
    python tests/test_vectors.py
    pytest tests/test_vectors.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import math
from functools import reduce

import numpy as np
import pytest

from lib.generators import blowup, complete, cycle, disjoint_union, gnp, paley, petersen
from lib.graph import Graph, degeneracy_order, mask_of
from lib.utils.errors import ParameterError
from lib.vectors import (
    BucketSets,
    RegularVectorParams,
    SrgParams,
    arcsin_gap,
    c5_bucket_sets,
    c5_bucket_vectors,
    c5_inner_product,
    degenerate_vectors,
    gamma_for_triangle_surplus,
    odd_cycle_inner_product,
    odd_cycle_st_vectors,
    regular_edge_inner_product,
    regular_vectors,
    signed_gap_bound,
    signed_vectors,
    srg_gamma,
)


def dot(va, u, v):
    return float(np.dot(va.row(u), va.row(v)))


@pytest.mark.parametrize('g', [paley(13), petersen(), blowup(cycle(5), 2), cycle(8)],
                         ids=['paley13', 'petersen', 'blowup_c5', 'c8'])
@pytest.mark.parametrize('gamma', [0.5, 1.0])
def test_regular_closed_form_matches_dot_product(g, gamma):
    params = RegularVectorParams.for_graph(g, gamma)
    va = regular_vectors(g, params)
    for u, v in g.edges():
        closed = regular_edge_inner_product(params, (g.rows[u] & g.rows[v]).bit_count())
        assert dot(va, u, v) == pytest.approx(closed, abs=1e-12)
    assert np.allclose(va.norms_squared(), params.norm_squared)


@pytest.mark.parametrize('gamma, d, n', [(0.0, 3, 10), (1.5, 3, 10), (0.5, 0, 10), (0.5, 10, 10)])
def test_regular_params_validation(gamma, d, n):
    with pytest.raises(ParameterError):
        RegularVectorParams(gamma, d, n)


def test_regular_vectors_need_regular_graph():
    with pytest.raises(ParameterError):
        RegularVectorParams.for_graph(Graph.from_edges(3, [(0, 1), (1, 2)]), 0.5)


def test_regular_vectors_density_cap():
    g = complete(101)
    with pytest.raises(ParameterError, match='0.99'):
        regular_vectors(g, RegularVectorParams.for_graph(g, 0.5))


@pytest.mark.parametrize('s, regime, gamma', [
    (-160.0, 'few_triangles', 1.0),
    (0.0, 'balanced', 1e-6),
    (160.0, 'many_triangles', 0.5e-6),
])
def test_gamma_regimes(s, regime, gamma):
    # n = 10, d = 4: threshold n·d^1.5 = 80
    choice = gamma_for_triangle_surplus(10, 4, s)
    assert choice.regime == regime
    assert choice.gamma == pytest.approx(gamma)


def test_srg_params_from_graph():
    p = SrgParams.from_graph(paley(13))
    assert (p.n, p.d, p.eta, p.mu) == (13, 6, 2, 3)
    assert p.triangles == 26
    assert srg_gamma(SrgParams.from_graph(petersen())).regime == 'balanced'


def test_srg_params_reject_bad_tuple():
    with pytest.raises(ParameterError):
        SrgParams(13, 6, 2, 2)
    with pytest.raises(ParameterError):
        SrgParams.from_graph(cycle(6))


def test_signed_vectors_without_high_codegree_match_regular():
    g = paley(13)
    params = RegularVectorParams.for_graph(g, 0.1)
    assert np.array_equal(signed_vectors(g, params, seed=1).vectors, regular_vectors(g, params).vectors)


def test_signed_vectors_randomize_high_codegree_coordinates():
    # 25 copies of K4: codegree 2 on every edge, threshold 20·9/100 = 1.8
    g = reduce(disjoint_union, [complete(4)] * 25)
    params = RegularVectorParams.for_graph(g, 0.1)
    first = signed_vectors(g, params, seed=4)
    assert np.array_equal(first.vectors, signed_vectors(g, params, seed=4).vectors)
    step = 0.1 / math.sqrt(3)
    us, vs = g.edge_array[:, 0], g.edge_array[:, 1]
    assert np.allclose(np.abs(first.vectors[us, vs]), step)
    assert np.any(first.vectors[us, vs] > 0)
    assert np.allclose(first.norms_squared(), params.norm_squared)


def test_signed_gap_bound_and_realized_gap():
    g = paley(13)
    params = RegularVectorParams.for_graph(g, 0.1)
    assert signed_gap_bound(g, params) == pytest.approx(0.1 * 13 * math.sqrt(6) / 4)
    regular = regular_vectors(g, params)
    assert arcsin_gap(g, regular, signed_vectors(g, params, seed=0)) == pytest.approx(0.0, abs=1e-12)

    # 25 copies of K4: 150 edges, each of codegree 2 above the threshold 1.8
    g = reduce(disjoint_union, [complete(4)] * 25)
    params = RegularVectorParams.for_graph(g, 0.1)
    assert signed_gap_bound(g, params) == pytest.approx(0.1 * 100 * math.sqrt(3) / 4 - 0.01 * 300 / 30)


def test_signed_gap_expectation_within_bound():
    # 2 K4 + 29 K33: 3-regular, n = 182, 8 ≤ d³/3 triangles; the 12 K4 edges
    # have codegree 2 > 20d²/n and every K33 edge has codegree 0
    g = reduce(disjoint_union, [complete(4)] * 2 + [blowup(complete(2), 3)] * 29)
    assert (g.n, g.max_degree) == (182, 3) and g.is_regular()
    params = RegularVectorParams.for_graph(g, 0.1)
    bound = signed_gap_bound(g, params)
    assert bound == pytest.approx(0.1 * 182 * math.sqrt(3) / 4 - 0.01 * 24 / 30)

    regular = regular_vectors(g, params)
    gaps = [arcsin_gap(g, regular, signed_vectors(g, params, seed=seed)) for seed in range(1000)]
    assert np.mean(gaps) <= bound
    # sign draws only touch K4 coordinates, so some draw moves the sum
    assert np.max(np.abs(gaps)) > 0


@pytest.mark.parametrize('gamma, g', [(0.5, paley(13)), (0.1, complete(8))])
def test_signed_vectors_ranges(gamma, g):
    with pytest.raises(ParameterError):
        signed_vectors(g, RegularVectorParams.for_graph(g, gamma), seed=0)


def test_c5_bucket_sets_on_petersen():
    g = petersen()
    sets = c5_bucket_sets(g, 1)
    # every non-neighbour sits at distance 2 with exactly one common neighbour
    assert all(mask.bit_count() == 6 for mask in sets.S)
    assert all(not (mask & g.rows[v]) for v, mask in enumerate(sets.S))
    assert c5_bucket_sets(g, 2).is_empty()


def test_c5_inner_product_matches_dot_product():
    g = blowup(cycle(5), 2)
    s = 2
    sets = c5_bucket_sets(g, s)
    va = c5_bucket_vectors(g, s)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert dot(va, u, v) == pytest.approx(c5_inner_product(g, sets, u, v), abs=1e-12)


def test_c5_bucket_sets_validation():
    with pytest.raises(ParameterError):
        c5_bucket_sets(petersen(), 0)
    with pytest.raises(ParameterError):
        c5_bucket_sets(Graph.from_edges(3, [(0, 1)]), 1)


def test_bucket_sets_must_be_disjoint():
    with pytest.raises(ParameterError):
        BucketSets(s=1, s_prime=1, S=(0b11, 0), T=(0b10, 0))


def test_odd_cycle_inner_product_matches_dot_product():
    g = cycle(5)
    sets = BucketSets(
        s=2, s_prime=1,
        S=(mask_of([2, 3]), mask_of([4]), 0, mask_of([0, 1]), mask_of([1, 2])),
        T=(mask_of([1]), mask_of([0, 2]), mask_of([1, 3]), 0, mask_of([0])),
        q=2,
    )
    va = odd_cycle_st_vectors(g, sets)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            a, b = odd_cycle_inner_product(g, sets, u, v)
            assert a >= 0 and b >= 0
            assert dot(va, u, v) == pytest.approx(b - a, abs=1e-12)


@pytest.mark.parametrize('seed', [0, 1])
def test_degenerate_inner_product_formula(seed):
    g = gnp(20, 0.25, seed)
    gamma = 0.5
    va = degenerate_vectors(g, gamma)
    degeneracy, order = degeneracy_order(g)
    position = {v: i for i, v in enumerate(order)}
    forward = [mask_of(u for u in g.neighbors(v) if position[u] > position[v]) for v in range(g.n)]
    for u, v in g.edges():
        shared = (forward[u] & forward[v]).bit_count()
        expected = -gamma / math.sqrt(degeneracy) + gamma ** 2 * shared / degeneracy
        assert dot(va, u, v) == pytest.approx(expected, abs=1e-12)
    assert np.all(va.norms_squared() <= 1 + gamma ** 2 + 1e-12)


def test_degenerate_vectors_gamma_range():
    with pytest.raises(ParameterError):
        degenerate_vectors(cycle(5), 0.0)


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
