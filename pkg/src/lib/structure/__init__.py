"""Cut combination, regularization, partitions and good-path profiles."""

from .combine import combine_cuts, split_cut, lift_cut
from .plan import SamplingPlan, ZERO_LABEL_PROBABILITY, ceil_positive
from .regularize import (
    RegularizationParams,
    RegularizationResult,
    regularize,
    regularize_basic,
    min_degree_core,
    odd_cycle_exponents,
    clique_exponents,
)
from .partition import (
    GoodPartition,
    good_partition,
    BucketChoice,
    dyadic_codegree_bucket,
    DEFAULT_BUCKET_EXPONENT,
)
from .good_paths import (
    GoodPathProfile,
    IntersectionSums,
    default_epsilon,
    index_pairs,
    good_path_profile,
    with_level,
    sdp_level,
    check_monotone,
    verify_good,
    st_sets,
    intersection_sums,
)

__all__ = [
    'combine_cuts',
    'split_cut',
    'lift_cut',
    'SamplingPlan',
    'ZERO_LABEL_PROBABILITY',
    'ceil_positive',
    'RegularizationParams',
    'RegularizationResult',
    'regularize',
    'regularize_basic',
    'min_degree_core',
    'odd_cycle_exponents',
    'clique_exponents',
    'GoodPartition',
    'good_partition',
    'BucketChoice',
    'dyadic_codegree_bucket',
    'DEFAULT_BUCKET_EXPONENT',
    'GoodPathProfile',
    'IntersectionSums',
    'default_epsilon',
    'index_pairs',
    'good_path_profile',
    'with_level',
    'sdp_level',
    'check_monotone',
    'verify_good',
    'st_sets',
    'intersection_sums',
]
