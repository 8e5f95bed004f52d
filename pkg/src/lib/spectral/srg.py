"""Closed-form smallest eigenvalue of strongly regular graphs."""

import math
from dataclasses import dataclass

from lib.vectors import SrgParams

REGIME_CONSTANT = 1.2


@dataclass(frozen=True)
class SrgEigenvalue:
    """
    Attributes:
        value: ½(η - μ - √((η-μ)² + 4(d-μ)))
        regime: 'negative' (s < -n d^{3/2}), 'middle' or 'positive' (s > n d^{3/2})
        comparison: |s|/(nd), √d or nd²/s for the three regimes
        s: Triangle surplus t - d³/6
    """

    value: float
    regime: str
    comparison: float
    s: float

    @property
    def ratio(self):
        """|λ_min| over the regime's comparison quantity."""
        return abs(self.value) / self.comparison if self.comparison else math.inf


def srg_lambda_min(p):
    """
    Smallest eigenvalue of srg(n, d, η, μ) with its regime tag.

    Examples:
        srg(13, 6, 2, 3) → ½(-1 - √13) ≈ -2.3028, regime 'middle'
        srg(10, 3, 0, 1) → -2

    Args:
        p: SrgParams (validated on construction)

    Returns:
        SrgEigenvalue
    """
    if not isinstance(p, SrgParams):
        p = SrgParams(*p)
    gap = p.eta - p.mu
    value = 0.5 * (gap - math.sqrt(gap * gap + 4 * (p.d - p.mu)))
    s = float(p.s)
    threshold = p.n * p.d ** 1.5
    if s < -threshold:
        regime, comparison = 'negative', abs(s) / (p.n * p.d)
    elif s <= threshold:
        regime, comparison = 'middle', math.sqrt(p.d)
    else:
        regime, comparison = 'positive', p.n * p.d * p.d / s
    return SrgEigenvalue(value, regime, comparison, s)
