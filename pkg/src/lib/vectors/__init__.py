"""Explicit vector families for hyperplane rounding."""

from .params import RegularVectorParams, SrgParams, GammaChoice, BucketSets
from .regular import (
    DEFAULT_GAMMA_SCALE,
    regular_vectors,
    regular_edge_inner_product,
    gamma_for_triangle_surplus,
    srg_gamma,
    signed_vectors,
    signed_gap_bound,
    arcsin_gap,
)
from .degenerate import degenerate_vectors
from .buckets import (
    c5_bucket_sets,
    c5_bucket_vectors,
    c5_inner_product,
    odd_cycle_st_vectors,
    odd_cycle_inner_product,
)

__all__ = [
    'RegularVectorParams',
    'SrgParams',
    'GammaChoice',
    'BucketSets',
    'DEFAULT_GAMMA_SCALE',
    'regular_vectors',
    'regular_edge_inner_product',
    'gamma_for_triangle_surplus',
    'srg_gamma',
    'signed_vectors',
    'signed_gap_bound',
    'arcsin_gap',
    'degenerate_vectors',
    'c5_bucket_sets',
    'c5_bucket_vectors',
    'c5_inner_product',
    'odd_cycle_st_vectors',
    'odd_cycle_inner_product',
]
