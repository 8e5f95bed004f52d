"""Shared configuration, errors, seeding and parallel helpers."""

from .errors import (
    SurplusLabError,
    ConfigError,
    GraphFormatError,
    GraphError,
    WalkCountOverflow,
    GeneratorError,
    OracleSizeError,
    ParameterError,
    VectorError,
    SpectralError,
    InapplicableAlgorithmError,
    InvariantViolation,
)
from .settings import Settings, load_settings, get_settings
from .seeding import STREAM_NAME, derive_seed, make_rng, coin
from .parallel import ordered_map, chunk_ranges

__all__ = [
    'SurplusLabError',
    'ConfigError',
    'GraphFormatError',
    'GraphError',
    'WalkCountOverflow',
    'GeneratorError',
    'OracleSizeError',
    'ParameterError',
    'VectorError',
    'SpectralError',
    'InapplicableAlgorithmError',
    'InvariantViolation',
    'Settings',
    'load_settings',
    'get_settings',
    'STREAM_NAME',
    'derive_seed',
    'make_rng',
    'coin',
    'ordered_map',
    'chunk_ranges',
]
