"""Dense complex-matrix substrate shared by every other module.

Matrices are plain numpy arrays of dtype complex128.  All index
conventions are row-major / first-factor-major: ``kron(a, b)`` puts the
``a`` index in the high digits, and every composite index elsewhere in
the package inherits this choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerance:
    """Numerical thresholds: absolute comparison and relative rank cutoff."""

    abs_eps: float = 1e-9
    rank_cutoff: float = 1e-8

    def __post_init__(self):
        if self.abs_eps <= 0 or self.rank_cutoff <= 0:
            raise ValueError("tolerances must be positive")


DEFAULT_TOL = Tolerance()


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    """e_{i,j} in M_n, 0-based indices."""
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, first factor major."""
    return np.kron(a, b)


def hs_inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product tr(x y*)."""
    if x.shape != y.shape or x.shape[0] != x.shape[1]:
        raise ValueError("hs_inner requires square matrices of equal size")
    return complex(np.trace(x @ y.conj().T))


def max_abs(x: np.ndarray) -> float:
    return float(np.max(np.abs(x))) if x.size else 0.0


def nullspace(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the numerical kernel, returned as columns.

    A singular vector belongs to the kernel when its singular value is
    below ``rank_cutoff`` times the largest singular value.
    """
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return eye(a.shape[1])
    _, s, vh = np.linalg.svd(a)
    smax = s[0] if len(s) else 0.0
    ncols = a.shape[1]
    if smax == 0.0:
        return eye(ncols)
    rank = int(np.sum(s > tol.rank_cutoff * smax))
    return vh[rank:].conj().T


def numerical_rank(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> int:
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol.rank_cutoff * s[0]))


def random_unitary(n: int, seed: int) -> np.ndarray:
    """Haar-distributed unitary, deterministic for fixed ``(n, seed)``.

    Complex Ginibre matrix followed by QR with the R diagonal phases
    pushed into Q.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def is_unitary(u: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    n = u.shape[0]
    return u.shape == (n, n) and max_abs(u @ u.conj().T - eye(n)) <= 1e3 * tol.abs_eps


def vectorize(mats) -> np.ndarray:
    """Stack matrices as columns of an (n*n, count) array."""
    return np.stack([np.asarray(m, dtype=complex).reshape(-1) for m in mats], axis=1)


def unvectorize(cols: np.ndarray, n: int):
    return [cols[:, j].reshape(n, n) for j in range(cols.shape[1])]


def orthonormal_span(mats, tol: Tolerance = DEFAULT_TOL):
    """Orthonormal (hs_inner) basis of the span of the given matrices."""
    if not mats:
        return []
    n = mats[0].shape[0]
    v = vectorize(mats)
    u, s, _ = np.linalg.svd(v, full_matrices=False)
    if len(s) == 0 or s[0] == 0.0:
        return []
    rank = int(np.sum(s > tol.rank_cutoff * s[0]))
    return unvectorize(u[:, :rank], n)


def subspace_distance(basis_a, basis_b, tol: Tolerance = DEFAULT_TOL) -> float:
    """Operator-norm distance between the orthogonal projections onto
    the spans of two matrix families (basis-independent)."""
    qa = _orthonormal_cols(basis_a, tol)
    qb = _orthonormal_cols(basis_b, tol)
    if qa.shape[1] == 0 and qb.shape[1] == 0:
        return 0.0
    if qa.shape[1] == 0 or qb.shape[1] == 0:
        return 1.0
    ra = qa - qb @ (qb.conj().T @ qa)
    rb = qb - qa @ (qa.conj().T @ qb)
    sa = np.linalg.svd(ra, compute_uv=False)
    sb = np.linalg.svd(rb, compute_uv=False)
    return float(max(sa[0] if len(sa) else 0.0, sb[0] if len(sb) else 0.0))


def _orthonormal_cols(mats, tol: Tolerance) -> np.ndarray:
    if not mats:
        return np.zeros((0, 0), dtype=complex)
    v = vectorize(mats)
    u, s, _ = np.linalg.svd(v, full_matrices=False)
    if len(s) == 0 or s[0] == 0.0:
        return u[:, :0]
    rank = int(np.sum(s > tol.rank_cutoff * s[0]))
    return u[:, :rank]
