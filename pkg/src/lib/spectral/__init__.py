"""Smallest adjacency eigenvalue, the eigenvalue cut bound and the srg closed form."""

from .eigen import (
    SpectralReport,
    JACOBI_MAX_VERTICES,
    jacobi_eigen,
    lambda_min,
    eigenvalue_upper_bound,
    rayleigh_check,
)
from .srg import SrgEigenvalue, REGIME_CONSTANT, srg_lambda_min

__all__ = [
    'SpectralReport',
    'JACOBI_MAX_VERTICES',
    'jacobi_eigen',
    'lambda_min',
    'eigenvalue_upper_bound',
    'rayleigh_check',
    'SrgEigenvalue',
    'REGIME_CONSTANT',
    'srg_lambda_min',
]
