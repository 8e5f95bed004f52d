"""Label distributions for the neighbourhood-sampling cuts."""

import math
from dataclasses import dataclass

import numpy as np

from lib.utils.errors import ParameterError

ZERO_LABEL_PROBABILITY = 1 / 3


@dataclass(frozen=True)
class SamplingPlan:
    """
    Label 0 with probability 1/3, each label 1..k with probability p, and
    label k+1 with the remaining mass.

    Attributes:
        k: Number of sampled centres
        p: Probability of each centre label
        seed: Seed of the plan's streams
    """

    k: int
    p: float
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"k ≥ 1 required, got {self.k}")
        if self.p < 0:
            raise ParameterError(f"p ≥ 0 required, got {self.p}")
        if self.k * self.p > 2 / 3 + 1e-12:
            raise ParameterError(f"k·p ≤ 2/3 violated: k = {self.k}, p = {self.p:.6g}")

    @property
    def probabilities(self):
        rest = max(0.0, 1 - ZERO_LABEL_PROBABILITY - self.k * self.p)
        return np.array([ZERO_LABEL_PROBABILITY] + [self.p] * self.k + [rest])

    def draw_labels(self, n, rng):
        """Labels in 0..k+1 for n vertices from one uniform draw each."""
        u = rng.random(n)
        labels = np.full(n, self.k + 1, dtype=np.int64)
        labels[u < ZERO_LABEL_PROBABILITY] = 0
        if self.p > 0:
            band = np.floor((u - ZERO_LABEL_PROBABILITY) / self.p).astype(np.int64) + 1
            inside = (u >= ZERO_LABEL_PROBABILITY) & (band <= self.k)
            labels[inside] = band[inside]
        return labels

    @classmethod
    def clamped(cls, k, p, seed=0):
        """Plan with p reduced to 2/(3k) when k·p would exceed 2/3."""
        return cls(k, min(p, 2 / (3 * k)), seed)


def ceil_positive(value):
    """⌈value⌉, at least 1."""
    return max(1, math.ceil(value - 1e-12))
