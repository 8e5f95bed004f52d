"""Vector assignments and random-hyperplane rounding."""

from .assignment import VectorAssignment, store_rows, format_assignment, DENSE_MAX_VERTICES
from .hyperplane import (
    RoundingOutcome,
    edge_cosines,
    analytic_expected_cut,
    hyperplane_round,
    augment_with_identity,
    surplus_lower_bound_from_products,
)

__all__ = [
    'VectorAssignment',
    'store_rows',
    'format_assignment',
    'DENSE_MAX_VERTICES',
    'RoundingOutcome',
    'edge_cosines',
    'analytic_expected_cut',
    'hyperplane_round',
    'augment_with_identity',
    'surplus_lower_bound_from_products',
]
