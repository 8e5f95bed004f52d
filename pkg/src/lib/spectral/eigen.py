"""
Smallest adjacency eigenvalue and the eigenvalue cut bound.

Up to 64 vertices a cyclic Jacobi solve diagonalizes A. Above that, power
iteration runs on B = ΔI - A, whose eigenvalues Δ - λ_i are non-negative, so
the dominant one is Δ - λ_min. Every result carries the residual
‖Ax - λx‖∞ of its unit eigenvector.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from lib.utils.errors import SpectralError
from lib.utils.seeding import make_rng

log = logging.getLogger(__name__)

JACOBI_MAX_VERTICES = 64
JACOBI_TOLERANCE = 1e-13
JACOBI_MAX_SWEEPS = 100
POWER_TOLERANCE = 1e-10
POWER_MAX_ITERATIONS = 100_000
RESIDUAL_FACTOR = 1e-8
RAYLEIGH_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpectralReport:
    """
    Attributes:
        lambda_min: Smallest adjacency eigenvalue
        method: 'exact_symmetric_solve' or 'shifted_power_iteration'
        iterations: Jacobi sweeps or power steps
        residual: ‖Ax - λx‖∞ for the unit eigenvector x
        upper_bound: m/2 + |λ_min|·n/4
        vector: The eigenvector x
    """

    lambda_min: float
    method: str
    iterations: int
    residual: float
    upper_bound: float
    vector: np.ndarray = field(repr=False, compare=False)


def jacobi_eigen(matrix, tolerance=JACOBI_TOLERANCE, max_sweeps=JACOBI_MAX_SWEEPS):
    """
    Cyclic Jacobi eigensolve of a symmetric matrix.

    Returns:
        tuple: (eigenvalues, eigenvectors as columns, sweeps)

    Raises:
        SpectralError: If the off-diagonal mass does not vanish
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    for sweep in range(1, max_sweeps + 1):
        off = math.sqrt(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)))
        if off <= tolerance * scale * n:
            return np.diag(a).copy(), v, sweep - 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) <= tolerance * scale * 1e-3:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                # A ← JᵀAJ on rows/columns p, q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    raise SpectralError(f"Jacobi did not converge in {max_sweeps} sweeps")


def _residual(adjacency, lam, x):
    return float(np.max(np.abs(adjacency @ x - lam * x)))


def _power_iteration(g, seed):
    adjacency = sp.csr_matrix(g.adjacency_matrix.astype(float))
    shift = float(g.max_degree)
    x = make_rng(seed, 'spectral', 'power').standard_normal(g.n)
    x /= np.linalg.norm(x)
    for step in range(1, POWER_MAX_ITERATIONS + 1):
        y = shift * x - adjacency @ x
        rho = float(x @ y)
        norm = np.linalg.norm(y)
        if norm == 0:
            raise SpectralError("power iteration collapsed to the zero vector")
        if float(np.max(np.abs(y - rho * x))) <= POWER_TOLERANCE * max(1.0, rho):
            return shift - rho, x, step
        x = y / norm
    raise SpectralError(f"power iteration did not converge in {POWER_MAX_ITERATIONS} steps")


def lambda_min(g, seed=0):
    """
    Smallest adjacency eigenvalue.

    Examples:
        K_n → -1
        C_5 → 2cos(4π/5) ≈ -1.6180

    Raises:
        SpectralError: On graphs without edges, non-convergence, or a
        residual above 1e-8·n
    """
    if g.n < 1 or g.m < 1:
        raise SpectralError("smallest eigenvalue needs a graph with at least one edge")
    adjacency = g.adjacency_matrix.astype(float)
    if g.n <= JACOBI_MAX_VERTICES:
        values, vectors, iterations = jacobi_eigen(adjacency)
        index = int(np.argmin(values))
        lam, x = float(values[index]), vectors[:, index]
        method = 'exact_symmetric_solve'
    else:
        lam, x, iterations = _power_iteration(g, seed)
        method = 'shifted_power_iteration'
    x = x / np.linalg.norm(x)
    residual = _residual(adjacency, lam, x)
    if residual > RESIDUAL_FACTOR * g.n:
        raise SpectralError(f"eigenvector residual {residual:.3g} exceeds {RESIDUAL_FACTOR * g.n:.3g}")
    upper = g.m / 2 + abs(lam) * g.n / 4
    log.debug("lambda_min n=%d method=%s iterations=%d lambda=%.10f residual=%.3g",
              g.n, method, iterations, lam, residual)
    return SpectralReport(lam, method, iterations, residual, upper, x)


def eigenvalue_upper_bound(g):
    """
    m/2 + |λ_min|·n/4, an upper bound on the maximum cut.

    Examples:
        K_5 → 6.25
        Petersen → 12.5
    """
    return lambda_min(g).upper_bound


def rayleigh_check(g, lam, seed=0, samples=10):
    """Every Rayleigh quotient xᵀAx/xᵀx of random Gaussian x is ≥ λ (up to 1e-9)."""
    adjacency = g.adjacency_matrix.astype(float)
    rng = make_rng(seed, 'spectral', 'rayleigh')
    for _ in range(samples):
        x = rng.standard_normal(g.n)
        quotient = float(x @ adjacency @ x) / float(x @ x)
        if quotient < lam - RAYLEIGH_TOLERANCE * max(1.0, abs(lam)):
            return False
    return True
