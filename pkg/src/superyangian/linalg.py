"""Dense exact linear algebra over F_p (numpy-backed)."""

from __future__ import annotations

import numpy as np


def _as_matrix(rows, p: int) -> np.ndarray:
    A = np.array(rows, dtype=np.int64) % p
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return A


def row_echelon_mod_p(A: np.ndarray, p: int):
    """In-place-free row echelon form; returns (R, pivot column list)."""
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p(rows, p: int) -> int:
    if not len(rows):
        return 0
    _, pivots = row_echelon_mod_p(_as_matrix(rows, p), p)
    return len(pivots)


def kernel_mod_p(rows, p: int, ncols: int | None = None):
    """Basis of the right null space {v : A v = 0}, as a list of int vectors."""
    if not len(rows):
        n = ncols or 0
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    A = _as_matrix(rows, p)
    R, pivots = row_echelon_mod_p(A, p)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-int(R[r, f])) % p
        basis.append(v)
    return basis
