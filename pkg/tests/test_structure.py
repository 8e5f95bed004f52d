"""
Tests for cut combination, sampling plans, degree partitions, dyadic
codegree buckets, regularization and good-path profiles.

Usage:
    python tests/test_structure.py
    pytest tests/test_structure.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import numpy as np
import pytest

from lib.generators import blowup, complete, cycle, gnp, paley, petersen
from lib.graph import Cut, Graph, iter_bits, mask_of, walk_count
from lib.oracle import max_cut_exact
from lib.structure import (
    RegularizationParams,
    SamplingPlan,
    ceil_positive,
    check_monotone,
    clique_exponents,
    combine_cuts,
    dyadic_codegree_bucket,
    good_partition,
    good_path_profile,
    intersection_sums,
    lift_cut,
    odd_cycle_exponents,
    regularize,
    regularize_basic,
    sdp_level,
    split_cut,
    st_sets,
    verify_good,
    with_level,
)
from lib.utils.errors import GraphError, ParameterError
from lib.utils.seeding import make_rng


# Cut combination

def test_combine_is_surplus_additive():
    g = gnp(20, 0.3, 1)
    parts = [range(0, 10), range(10, 20)]
    part_cuts = [max_cut_exact(g.induced(part)[0]).witness for part in parts]
    combined = combine_cuts(g, parts, part_cuts)
    assert combined.surplus >= sum(cut.surplus for cut in part_cuts)
    combined.validate()


def test_combine_places_uncovered_vertices_greedily():
    g = complete(4)
    cut = combine_cuts(g, [], [])
    assert cut.side == (0, 1, 0, 1)
    assert cut.surplus == 1


def test_combine_random_orientation_is_seeded():
    g = gnp(16, 0.4, 2)
    parts = [range(0, 8), range(8, 16)]
    part_cuts = [max_cut_exact(g.induced(part)[0]).witness for part in parts]
    assert combine_cuts(g, parts, part_cuts, seed=3) == combine_cuts(g, parts, part_cuts, seed=3)


def test_combine_rejects_overlap_and_mismatch():
    g = cycle(6)
    sub, _ = g.induced([0, 1, 2])
    with pytest.raises(GraphError):
        combine_cuts(g, [[0, 1, 2], [2, 3, 4]], [Cut.trivial(sub), Cut.trivial(sub)])
    with pytest.raises(GraphError):
        combine_cuts(g, [[0, 1]], [Cut.trivial(sub)])
    with pytest.raises(GraphError):
        combine_cuts(g, [[0, 1, 2]], [])


def test_split_cut_crosses_every_edge_between_sides():
    g = gnp(12, 0.5, 4)
    a, b = mask_of(range(0, 5)), mask_of(range(5, 9))
    order, cut = split_cut(g, a, b)
    assert order == tuple(range(9))
    assert cut.crossing == g.edges_between(a, b)
    with pytest.raises(GraphError):
        split_cut(g, a, a)


def test_lift_cut_keeps_local_surplus():
    g = petersen()
    vertices = [0, 1, 2, 3, 4]
    local = max_cut_exact(g.induced(vertices)[0]).witness
    assert lift_cut(g, vertices, local).surplus >= local.surplus


# Sampling plans

def test_sampling_plan_validation():
    with pytest.raises(ParameterError):
        SamplingPlan(0, 0.1)
    with pytest.raises(ParameterError):
        SamplingPlan(5, 0.2)
    plan = SamplingPlan.clamped(5, 0.2)
    assert plan.p == pytest.approx(2 / 15)
    assert plan.probabilities.sum() == pytest.approx(1.0)


def test_sampling_plan_label_frequencies():
    plan = SamplingPlan(4, 0.1)
    labels = plan.draw_labels(60000, make_rng(0, 'plan'))
    counts = np.bincount(labels, minlength=6) / labels.size
    assert np.allclose(counts, plan.probabilities, atol=0.01)


@pytest.mark.parametrize('value, expected', [(0.2, 1), (3.0, 3), (3.2, 4), (-5, 1)])
def test_ceil_positive(value, expected):
    assert ceil_positive(value) == expected


# Good partitions and buckets

def test_good_partition_examples():
    g = complete(4)
    part = good_partition(g, 2.5)
    assert part.S == () and part.T == (0, 1, 2, 3)
    part = good_partition(g, 4)
    assert part.S == (0, 1, 2, 3) and part.T == ()


@pytest.mark.parametrize('d', [1, 2, 3.5, 5])
def test_good_partition_properties(d):
    g = gnp(40, 0.15, 5)
    part = good_partition(g, d)
    assert part.s_mask | part.t_mask == g.full_mask
    assert not part.s_mask & part.t_mask
    later = g.full_mask
    for v in part.peel_order:
        later &= ~(1 << v)
        assert g.degree_into(v, later) < d
    assert all(g.degree_into(v, part.t_mask) >= d for v in part.T)


def test_good_partition_rejects_negative_threshold():
    with pytest.raises(ParameterError):
        good_partition(cycle(5), -1)


def test_dyadic_bucket_examples():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    choice = dyadic_codegree_bucket(star)
    assert (choice.s, choice.count) == (1, 3)
    choice = dyadic_codegree_bucket(cycle(4))
    assert (choice.s, choice.count) == (2, 4)
    assert choice.bucket == 1


def test_dyadic_bucket_needs_two_paths():
    with pytest.raises(ParameterError):
        dyadic_codegree_bucket(Graph.from_edges(4, [(0, 1), (2, 3)]))


# Regularization

@pytest.mark.parametrize('alpha, beta, epsilon', [(0, 0, 0.5), (2, 1, 0.5), (1.5, 1.5, 0.5), (0, 1, 1.0)])
def test_regularization_params_validation(alpha, beta, epsilon):
    with pytest.raises(ParameterError):
        RegularizationParams(alpha, beta, epsilon)


def test_exponent_helpers():
    assert odd_cycle_exponents(5) == pytest.approx((5 / 6, 11 / 12))
    assert clique_exponents(4) == (-1, 3)
    params = RegularizationParams.basic(1.0)
    assert (params.alpha, params.epsilon) == (0.0, 0.5)
    assert params.basic_c2 == pytest.approx(0.25)
    assert params.basic_C == pytest.approx(4 * params.C)


def test_regularize_keeps_regular_graph():
    g = paley(13)
    result = regularize(g, RegularizationParams(*clique_exponents(4), 0.25))
    assert result.kind == 'subgraph'
    assert result.subgraph == g
    assert result.vertices == tuple(range(13))
    assert result.trace == ('bounded',)


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_regularize_postconditions(seed):
    g = gnp(40, 0.2, seed)
    params = RegularizationParams(*odd_cycle_exponents(5), 0.25)
    result = regularize(g, params, seed=seed, trials=8)
    if result.kind == 'cut':
        result.cut.validate()
    else:
        sub = result.subgraph
        assert sub.max_degree <= params.C * float(sub.average_degree) * (1 + 1e-9)
        assert sub == g.induced(result.vertices)[0]


def test_regularize_cut_case_meets_target():
    # star K_{1,20} with θ = 0.9: the centre alone exceeds C0·d, e(T) = 0 and e(S, T) = m
    g = Graph.from_edges(21, [(0, leaf) for leaf in range(1, 21)])
    params = RegularizationParams(-1.0, 1.0, 0.9)
    assert params.theta == pytest.approx(0.9)
    assert g.max_degree > params.c0 * float(g.average_degree)
    result = regularize(g, params, seed=0, trials=1)
    assert result.kind == 'cut'
    assert result.trace == ('cut',)
    assert result.target == pytest.approx(0.81 / 160 * 20)
    assert float(result.cut.surplus) >= result.target
    assert result.subset_trials >= 1
    assert result.subset_trials & (result.subset_trials - 1) == 0
    result.cut.validate()


def test_regularize_basic_has_min_degree():
    g = gnp(40, 0.2, 3)
    result = regularize_basic(g, *reversed(odd_cycle_exponents(5)))
    if result.kind == 'subgraph':
        assert result.trace[-1] == 'core'
        assert result.subgraph.m > 0


# Good-path profiles

def test_profile_on_petersen():
    g = petersen()
    prof = good_path_profile(g, 5, seed=1)
    assert (prof.ell, prof.q) == (2, 2)
    assert check_monotone(prof)
    assert verify_good(prof)
    assert all(len(path) == 3 for path in prof.A)
    dump = prof.to_dict()
    assert dump['A'] == len(prof.A)
    assert sum(dump['layer_sizes']) == g.n


def test_profile_tuples_follow_layers():
    prof = good_path_profile(blowup(cycle(7), 2), 7, seed=2)
    for path in prof.A:
        assert [prof.layers[v] for v in path] == list(range(prof.q + 1))
    for path in prof.B:
        assert [prof.layers[v] for v in path] == list(range(prof.q))


def test_profile_parameter_errors():
    with pytest.raises(ParameterError):
        good_path_profile(petersen(), 4)
    with pytest.raises(ParameterError):
        good_path_profile(petersen(), 5, q=3)
    with pytest.raises(ParameterError):
        good_path_profile(Graph.empty(5), 5)


def test_with_level_and_sdp_level():
    prof = good_path_profile(petersen(), 7, seed=0)
    assert prof.ell == 3
    assert 2 <= sdp_level(prof) <= 3
    lower = with_level(prof, 2, seed=0)
    assert lower.q == 2 and lower.signature == prof.signature
    assert verify_good(lower)
    with pytest.raises(ParameterError):
        with_level(prof, 4)


def test_st_sets_postconditions():
    g = petersen()
    prof = good_path_profile(g, 5, seed=1)
    sets = st_sets(prof, 2)
    s, s_prime = prof.s(0, 2), prof.s(0, 1)
    assert (sets.s, sets.s_prime) == (s, s_prime)
    for u in range(g.n):
        assert sets.S[u].bit_count() * s <= g.max_degree ** 2
        assert sets.T[u].bit_count() * s_prime <= g.max_degree
        for u0 in iter_bits(sets.S[u]):
            assert walk_count(g, u0, u, 2) >= s
    with pytest.raises(ParameterError):
        st_sets(prof, 3)


def test_intersection_sums_are_counts():
    g = petersen()
    sets = st_sets(good_path_profile(g, 5, seed=1), 2)
    sums = intersection_sums(g, sets)
    assert sums.ss >= 0 and sums.tt >= 0 and sums.st >= 0
    assert sums.ss_scale > 0


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
