"""
Tests for the smallest adjacency eigenvalue, the eigenvalue cut bound and
the strongly regular closed form.

Usage:
    python tests/test_spectral.py
    pytest tests/test_spectral.py
"""

import sys
import os

# Add src to path to import lib modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import math

import numpy as np
import pytest

from lib.generators import complete, cycle, gnp, paley, petersen
from lib.graph import Graph
from lib.oracle import max_cut_exact
from lib.spectral import (
    JACOBI_MAX_VERTICES,
    eigenvalue_upper_bound,
    jacobi_eigen,
    lambda_min,
    rayleigh_check,
    srg_lambda_min,
)
from lib.utils.errors import SpectralError
from lib.vectors import SrgParams


@pytest.mark.parametrize('g, expected', [
    (complete(5), -1.0),
    (cycle(5), 2 * math.cos(4 * math.pi / 5)),
    (petersen(), -2.0),
    (paley(13), 0.5 * (-1 - math.sqrt(13))),
], ids=['k5', 'c5', 'petersen', 'paley13'])
def test_lambda_min_known_values(g, expected):
    report = lambda_min(g)
    assert report.method == 'exact_symmetric_solve'
    assert report.lambda_min == pytest.approx(expected, abs=1e-9)
    assert report.residual <= 1e-8 * g.n


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_lambda_min_matches_numpy(seed):
    g = gnp(30, 0.3, seed)
    expected = np.linalg.eigvalsh(g.adjacency_matrix.astype(float)).min()
    assert lambda_min(g).lambda_min == pytest.approx(expected, abs=1e-9)


def test_power_iteration_on_large_paley():
    g = paley(73)
    assert g.n > JACOBI_MAX_VERTICES
    report = lambda_min(g, seed=1)
    assert report.method == 'shifted_power_iteration'
    expected = srg_lambda_min(SrgParams.from_graph(g)).value
    assert report.lambda_min == pytest.approx(expected, abs=1e-6)


def test_jacobi_diagonalizes():
    matrix = np.array([[2.0, 1.0], [1.0, 2.0]])
    values, vectors, _ = jacobi_eigen(matrix)
    assert sorted(values) == pytest.approx([1.0, 3.0])
    assert np.allclose(matrix @ vectors, vectors * values)


def test_lambda_min_needs_edges():
    with pytest.raises(SpectralError):
        lambda_min(Graph.empty(4))


@pytest.mark.parametrize('g, bound', [(complete(5), 6.25), (petersen(), 12.5)], ids=['k5', 'petersen'])
def test_eigenvalue_upper_bound_examples(g, bound):
    assert eigenvalue_upper_bound(g) == pytest.approx(bound)


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_eigenvalue_bound_dominates_max_cut(seed):
    g = gnp(14, 0.4, seed)
    assert eigenvalue_upper_bound(g) >= max_cut_exact(g).mc - 1e-6


def test_rayleigh_check():
    g = petersen()
    assert rayleigh_check(g, lambda_min(g).lambda_min)
    assert not rayleigh_check(g, 10.0)


def test_srg_closed_form_examples():
    result = srg_lambda_min((13, 6, 2, 3))
    assert result.value == pytest.approx(-2.3028, abs=1e-4)
    assert result.regime == 'middle'
    assert result.comparison == pytest.approx(math.sqrt(6))
    assert srg_lambda_min(SrgParams(10, 3, 0, 1)).value == pytest.approx(-2.0)


@pytest.mark.parametrize('g', [petersen(), paley(13), paley(17)], ids=['petersen', 'paley13', 'paley17'])
def test_srg_closed_form_matches_eigensolve(g):
    closed = srg_lambda_min(SrgParams.from_graph(g)).value
    assert lambda_min(g).lambda_min == pytest.approx(closed, abs=1e-9)


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
