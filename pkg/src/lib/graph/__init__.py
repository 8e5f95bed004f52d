"""Graph representation, counting primitives and analytic bounds."""

from .graph import Graph, Cut, CodegreeProfile, iter_bits, mask_of
from .counting import (
    DegreeStats,
    degree_stats,
    codegree,
    walk_vector,
    walk_count,
    walk_matrix,
    closed_walk_count,
    triangle_count,
    triangle_surplus,
    clique_count,
    hom_count_c5,
    two_path_count,
    degeneracy_order,
)
from .bounds import (
    BoundReport,
    bound_report,
    edwards_bound,
    shearer_raw,
    theorem_targets,
    regular_triangle_target,
    degenerate_conversion_bound,
    clique_conversion_exponent,
)
from .edgelist import parse_edge_list, read_edge_list, format_edge_list, write_edge_list

__all__ = [
    'Graph',
    'Cut',
    'CodegreeProfile',
    'iter_bits',
    'mask_of',
    'DegreeStats',
    'degree_stats',
    'codegree',
    'walk_vector',
    'walk_count',
    'walk_matrix',
    'closed_walk_count',
    'triangle_count',
    'triangle_surplus',
    'clique_count',
    'hom_count_c5',
    'two_path_count',
    'degeneracy_order',
    'BoundReport',
    'bound_report',
    'edwards_bound',
    'shearer_raw',
    'theorem_targets',
    'regular_triangle_target',
    'degenerate_conversion_bound',
    'clique_conversion_exponent',
    'parse_edge_list',
    'read_edge_list',
    'format_edge_list',
    'write_edge_list',
]
