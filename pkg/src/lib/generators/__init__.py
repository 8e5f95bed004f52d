"""Seeded and deterministic graph families."""

from .families import (
    gnp,
    bipartite_random,
    triangle_free_random,
    paley,
    projective_points,
    polarity,
    blowup,
    complete,
    cycle,
    petersen,
    disjoint_union,
)
from .spec import GeneratorSpec, FAMILIES

__all__ = [
    'gnp',
    'bipartite_random',
    'triangle_free_random',
    'paley',
    'projective_points',
    'polarity',
    'blowup',
    'complete',
    'cycle',
    'petersen',
    'disjoint_union',
    'GeneratorSpec',
    'FAMILIES',
]
