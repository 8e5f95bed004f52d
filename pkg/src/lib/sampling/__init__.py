"""Neighbourhood-sampling cuts and the H-free dispatch pipelines."""

from .neighborhood import (
    DEFAULT_EPSILON,
    TrialRecord,
    SamplingCutResult,
    sample_cut,
    triangle_sampling_cut,
    bucket_neighborhood_cut,
    expected_gain_terms,
)
from .sparse import SparseSetResult, sparse_set_cut, sparse_set_target, deduplicate
from .trimming import (
    AuxGraphParams,
    TrimmingResult,
    aux_edge_count,
    excess_levels,
    codegree_trimming_cut,
)
from .cliques import (
    KrCutResult,
    CompositeCutResult,
    exclusive_neighborhoods,
    kr_recursive_cut,
    composite_kr_cut,
)
from .odd_cycles import OddCycleCutResult, odd_cycle_pipeline_cut

__all__ = [
    'DEFAULT_EPSILON',
    'TrialRecord',
    'SamplingCutResult',
    'sample_cut',
    'triangle_sampling_cut',
    'bucket_neighborhood_cut',
    'expected_gain_terms',
    'SparseSetResult',
    'sparse_set_cut',
    'sparse_set_target',
    'deduplicate',
    'AuxGraphParams',
    'TrimmingResult',
    'aux_edge_count',
    'excess_levels',
    'codegree_trimming_cut',
    'KrCutResult',
    'CompositeCutResult',
    'exclusive_neighborhoods',
    'kr_recursive_cut',
    'composite_kr_cut',
    'OddCycleCutResult',
    'odd_cycle_pipeline_cut',
]
