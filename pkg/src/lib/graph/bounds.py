"""
Analytic surplus bounds for a single graph.

The report collects the Edwards lower bound, the raw Shearer-form sum, the
eigenvalue upper bound (on request) and constant-free target forms for the
graph classes handled elsewhere in the package.
"""

import math
from dataclasses import dataclass, field

from .counting import degeneracy_order, triangle_surplus


@dataclass(frozen=True)
class BoundReport:
    m: int
    edwards: float
    shearer_raw: float
    eigenvalue_upper: float | None = None
    targets: dict = field(default_factory=dict)


def edwards_bound(m):
    """
    Guaranteed surplus (√(8m+1) - 1)/8 of every graph with m edges.

    Examples:
        m = 3 → 0.5
        m = 10 → 1.0
    """
    return (math.sqrt(8 * m + 1) - 1) / 8


def shearer_raw(g):
    """Σ_v √d(v), reported without the absolute constant."""
    return math.fsum(math.sqrt(d) for d in g.degrees)


def clique_conversion_exponent(r):
    """Exponent a = r/(2r-3) fed to the degenerate conversion for K_r-free graphs."""
    return r / (2 * r - 3)


def degenerate_conversion_bound(m, d, a):
    """
    Surplus value m / d^((2-a)/(1+a)) reached by converting a regular-graph
    bound of exponent a to d-degenerate graphs. Bound value only.
    """
    if m == 0 or d <= 0:
        return 0.0
    return m / d ** ((2 - a) / (1 + a))


def regular_triangle_target(n, d, s):
    """Three-regime target form |s|/d, n√d, n²d²/s by the size of s."""
    if d <= 0:
        return 0.0
    threshold = n * d ** 1.5
    if s < -threshold:
        return abs(s) / d
    if s <= threshold:
        return n * math.sqrt(d)
    return n * n * d * d / s


def theorem_targets(g):
    """Constant-free surplus target forms keyed by graph class."""
    m = g.m
    d = float(g.average_degree)
    degeneracy, _ = degeneracy_order(g)
    return {
        'triangle_free_degenerate': m / math.sqrt(degeneracy) if degeneracy else 0.0,
        'few_triangles': d * d,
        'regular_triangle_dependence': regular_triangle_target(g.n, d, triangle_surplus(g)),
        'odd_cycle_c5': m ** (6 / 7),
        'odd_cycle_c7': m ** (8 / 9),
        'clique_k4': m ** (0.5 + 3 / 14),
        'clique_k4_degenerate': degenerate_conversion_bound(
            m, degeneracy, clique_conversion_exponent(4)
        ),
    }


def bound_report(g, include_eigenvalue=False):
    """
    Collect the bound values for g.

    Args:
        g: Graph
        include_eigenvalue: Also compute m/2 + |λ_min| n/4 (needs m ≥ 1)

    Returns:
        BoundReport
    """
    upper = None
    if include_eigenvalue and g.m > 0:
        from lib.spectral import eigenvalue_upper_bound
        upper = eigenvalue_upper_bound(g)
    return BoundReport(
        m=g.m,
        edwards=edwards_bound(g.m),
        shearer_raw=shearer_raw(g),
        eigenvalue_upper=upper,
        targets=theorem_targets(g),
    )
