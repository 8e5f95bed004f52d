"""Exact MaxCut oracle and local-search baseline."""

from .exact import OracleResult, max_cut_exact, EXACT_MAX_VERTICES
from .local_search import local_search, improve_cut

__all__ = [
    'OracleResult',
    'max_cut_exact',
    'EXACT_MAX_VERTICES',
    'local_search',
    'improve_cut',
]
