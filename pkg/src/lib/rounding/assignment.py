"""
Per-vertex vector assignments.

Vectors are rows of an (n, dim) matrix: a dense numpy array up to 2 000
vertices, a scipy CSR matrix above that.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from lib.utils.errors import VectorError

DENSE_MAX_VERTICES = 2_000


def store_rows(matrix):
    """Pick the storage for an (n, dim) vector matrix by vertex count."""
    if matrix.shape[0] > DENSE_MAX_VERTICES:
        return sp.csr_matrix(matrix)
    if sp.issparse(matrix):
        return matrix.toarray()
    return np.asarray(matrix, dtype=float)


@dataclass(frozen=True, eq=False)
class VectorAssignment:
    """
    Attributes:
        vectors: (n, dim) matrix, row v is the vector of vertex v
        label: Name of the family that produced the vectors
    """

    vectors: object
    label: str

    def __post_init__(self):
        data = self.vectors.data if sp.issparse(self.vectors) else self.vectors
        if not np.all(np.isfinite(data)):
            raise VectorError(f"{self.label}: vector entries must be finite")

    @property
    def n(self):
        return self.vectors.shape[0]

    @property
    def dim(self):
        return self.vectors.shape[1]

    @property
    def is_sparse(self):
        return sp.issparse(self.vectors)

    def row(self, v):
        if self.is_sparse:
            return self.vectors.getrow(v).toarray().ravel()
        return self.vectors[v]

    def norms_squared(self):
        if self.is_sparse:
            return np.asarray(self.vectors.multiply(self.vectors).sum(axis=1)).ravel()
        return np.einsum('ij,ij->i', self.vectors, self.vectors)

    def pair_products(self, us, vs):
        """⟨x^u, x^v⟩ for aligned index arrays."""
        if self.is_sparse:
            return np.asarray(self.vectors[us].multiply(self.vectors[vs]).sum(axis=1)).ravel()
        return np.einsum('ij,ij->i', self.vectors[us], self.vectors[vs])

    def project(self, direction):
        return np.asarray(self.vectors @ direction).ravel()

    def require_nonzero(self):
        zero = np.flatnonzero(self.norms_squared() == 0)
        if zero.size:
            raise VectorError(f"{self.label}: vertex {int(zero[0])} has the zero vector")


def format_assignment(va, precision=6):
    """Debug text: one `v: index:value ...` line per vertex, non-zero entries only."""
    lines = []
    for v in range(va.n):
        row = va.row(v)
        entries = ' '.join(f"{i}:{row[i]:.{precision}g}" for i in np.flatnonzero(row))
        lines.append(f"{v}: {entries}".rstrip())
    return '\n'.join(lines)
