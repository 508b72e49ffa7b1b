"""Small dense matrix utilities used throughout the estimators.

Conventions: ``vec`` stacks columns (so the standard commutation and
elimination identities hold); matrices are plain float ndarrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigenvalueError, FactorizationError


def vec(m):
    """Column-stack a matrix into a vector: entry (i, j) lands at j*rows + i."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2:
        raise ValueError("vec expects a 2-D array")
    return m.reshape(-1, order="F")


def unvec(v, rows, cols):
    """Inverse of :func:`vec` for a known shape."""
    v = np.asarray(v, dtype=float)
    if v.size != rows * cols:
        raise ValueError(f"cannot reshape length-{v.size} vector to {rows}x{cols}")
    return v.reshape(rows, cols, order="F")


def vech(m):
    """Column-stack the lower triangle (diagonal included) of a square matrix."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("vech expects a square matrix")
    d = m.shape[0]
    i, j = _vech_indices(d)
    return m[i, j]


def unvech(v):
    """Rebuild the symmetric matrix whose vech is ``v``."""
    v = np.asarray(v, dtype=float)
    d = int(round((np.sqrt(8 * v.size + 1) - 1) / 2))
    if d * (d + 1) // 2 != v.size:
        raise ValueError(f"length {v.size} is not a triangular number")
    out = np.zeros((d, d))
    i, j = _vech_indices(d)
    out[i, j] = v
    out[j, i] = v
    return out


def _vech_indices(d):
    # (i, j) pairs with i >= j, ordered column-major: (0,0),(1,0),...,(1,1),...
    j, i = np.triu_indices(d)
    return i, j


def commutation_matrix(m, n):
    """Permutation K with K @ vec(G) == vec(G.T) for every m-by-n G."""
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    k = np.zeros((m * n, m * n))
    i, j = np.indices((m, n))
    k[(i * n + j).ravel(), (j * m + i).ravel()] = 1.0
    return k


def elimination_matrix(d):
    """0/1 matrix L with L @ vec(F) == vech(F) for every d-by-d F."""
    if d < 1:
        raise ValueError("dimension must be positive")
    i, j = _vech_indices(d)
    rows = np.arange(i.size)
    out = np.zeros((i.size, d * d))
    out[rows, j * d + i] = 1.0
    return out


def cholesky_lower(omega):
    """Lower Cholesky factor of a symmetric positive definite matrix.

    The input is symmetrized as (M + M.T)/2 first, which absorbs the
    rounding asymmetry kernel-averaged covariances carry.  A non-positive
    leading minor raises :class:`FactorizationError` with the 1-based
    pivot index.
    """
    omega = np.asarray(omega, dtype=float)
    if omega.ndim != 2 or omega.shape[0] != omega.shape[1]:
        raise ValueError("cholesky_lower expects a square matrix")
    sym = (omega + omega.T) / 2.0
    try:
        return np.linalg.cholesky(sym)
    except np.linalg.LinAlgError:
        raise FactorizationError(_failing_pivot(sym)) from None


def _failing_pivot(sym):
    # Plain outer-product Cholesky, only used to locate the bad pivot.
    d = sym.shape[0]
    a = sym.copy()
    for k in range(d):
        if a[k, k] <= 0.0:
            return k + 1
        a[k, k] = np.sqrt(a[k, k])
        a[k + 1 :, k] /= a[k, k]
        for j in range(k + 1, d):
            a[j:, j] -= a[j:, k] * a[j, k]
    return d


@dataclass(frozen=True)
class CompanionMatrix:
    """Stacked-lag companion form of a VAR coefficient set.

    ``mat`` is dp-by-dp: the first d rows hold [A_1 ... A_p], the rows
    below hold the shifted identity.
    """

    d: int
    p: int
    mat: np.ndarray

    def top_blocks(self):
        """Read back the lag matrices [A_1, ..., A_p] from the top rows."""
        return [self.mat[: self.d, j * self.d : (j + 1) * self.d] for j in range(self.p)]


def build_companion(a_mats):
    """Assemble the companion matrix from lag matrices A_1..A_p (each d-by-d)."""
    if not a_mats:
        raise ValueError("need at least one lag matrix")
    blocks = [np.asarray(a, dtype=float) for a in a_mats]
    d = blocks[0].shape[0]
    for b in blocks:
        if b.shape != (d, d):
            raise ValueError(f"lag blocks must all be {d}x{d}, got {b.shape}")
    p = len(blocks)
    mat = np.zeros((d * p, d * p))
    mat[:d, :] = np.hstack(blocks)
    if p > 1:
        mat[d:, : d * (p - 1)] = np.eye(d * (p - 1))
    return CompanionMatrix(d=d, p=p, mat=mat)


def spectral_radius(m):
    """Largest eigenvalue modulus of a square matrix."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("spectral_radius expects a square matrix")
    if m.shape[0] == 0:
        return 0.0
    try:
        eigs = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise EigenvalueError(f"eigenvalue iteration did not converge: {exc}") from None
    return float(np.max(np.abs(eigs)))
