"""
Tests for vector assignments and random-hyperplane rounding.

Usage:
    python tests/test_rounding.py
    pytest tests/test_rounding.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import math

import numpy as np
import pytest
import scipy.sparse as sp

from lib.generators import cycle, petersen
from lib.graph import Graph
from lib.rounding import (
    VectorAssignment,
    analytic_expected_cut,
    augment_with_identity,
    edge_cosines,
    format_assignment,
    hyperplane_round,
    store_rows,
    surplus_lower_bound_from_products,
)
from lib.utils.errors import ParameterError, VectorError
from lib.vectors import RegularVectorParams, regular_vectors

EDGE = Graph.from_edges(2, [(0, 1)])


def test_antipodal_edge_is_always_cut():
    va = VectorAssignment(np.array([[1.0, 0.0], [-1.0, 0.0]]), 'antipodal')
    assert analytic_expected_cut(EDGE, va) == pytest.approx(1.0)
    outcome = hyperplane_round(EDGE, va, seed=0, trials=10)
    assert outcome.best_crossing == 1
    assert outcome.mean_crossing == pytest.approx(1.0)


def test_orthogonal_edge_is_cut_half_the_time():
    va = VectorAssignment(np.eye(2), 'orthogonal')
    assert analytic_expected_cut(EDGE, va) == pytest.approx(0.5)


def test_zero_vector_rejected():
    va = VectorAssignment(np.array([[1.0, 0.0], [0.0, 0.0]]), 'zero')
    with pytest.raises(VectorError):
        edge_cosines(EDGE, va)


def test_non_finite_entries_rejected():
    with pytest.raises(VectorError):
        VectorAssignment(np.array([[np.nan, 1.0]]), 'nan')


def test_size_mismatch_rejected():
    va = VectorAssignment(np.eye(3), 'three')
    with pytest.raises(VectorError):
        edge_cosines(EDGE, va)


def test_trials_must_be_positive():
    with pytest.raises(ParameterError):
        hyperplane_round(EDGE, VectorAssignment(np.eye(2), 'x'), seed=0, trials=0)


def test_rounding_is_deterministic_per_seed():
    g = petersen()
    va = regular_vectors(g, RegularVectorParams.for_graph(g, 0.5))
    first = hyperplane_round(g, va, seed=11, trials=50)
    second = hyperplane_round(g, va, seed=11, trials=50)
    assert first.cut == second.cut
    assert first.mean_crossing == second.mean_crossing
    assert first.best_crossing >= first.mean_crossing


def test_monte_carlo_mean_tracks_analytic_expectation():
    g = cycle(9)
    va = regular_vectors(g, RegularVectorParams.for_graph(g, 0.5))
    trials = 4000
    outcome = hyperplane_round(g, va, seed=3, trials=trials)
    error = outcome.crossing_std / math.sqrt(trials)
    assert abs(outcome.mean_crossing - outcome.analytic_expectation) <= 4 * error


def test_identity_augmentation_keeps_products():
    g = petersen()
    va = regular_vectors(g, RegularVectorParams.for_graph(g, 0.5))
    augmented = augment_with_identity(g, va)
    us, vs = g.edge_array[:, 0], g.edge_array[:, 1]
    assert np.allclose(va.pair_products(us, vs), augmented.pair_products(us, vs))
    assert np.allclose(augmented.norms_squared(), va.norms_squared() + 1)
    assert augmented.label.endswith('+identity')


def test_large_assignments_are_sparse():
    va = VectorAssignment(store_rows(sp.identity(2001, format='csr')), 'big')
    assert va.is_sparse
    assert va.pair_products(np.array([0, 5]), np.array([0, 6])).tolist() == [1.0, 0.0]
    assert not VectorAssignment(store_rows(np.eye(4)), 'small').is_sparse


def test_format_assignment():
    va = VectorAssignment(np.array([[1.0, 0.0], [0.0, 2.5]]), 'debug')
    assert format_assignment(va) == "0: 0:1\n1: 1:2.5"


def test_surplus_lower_bound_from_products():
    assert surplus_lower_bound_from_products([]) == 0.0
    assert surplus_lower_bound_from_products([(1.0, 0.0)]) == pytest.approx(1 / math.pi)
    assert surplus_lower_bound_from_products([(1.0, 0.0), (0.0, 1.0)], max_norm_sq=2.0) == \
        pytest.approx(1 / (2 * math.pi) - 0.5)
    per_edge = surplus_lower_bound_from_products([(2.0, 0.0)], norm_products=[2.0])
    assert per_edge == pytest.approx(1 / math.pi)


@pytest.mark.parametrize('pairs, max_norm_sq', [([(-1.0, 0.0)], 1.0), ([(1.0, 0.0)], 0.5)])
def test_surplus_lower_bound_rejects_bad_input(pairs, max_norm_sq):
    with pytest.raises(ParameterError):
        surplus_lower_bound_from_products(pairs, max_norm_sq=max_norm_sq)


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
