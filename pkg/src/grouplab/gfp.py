"""Dense linear algebra over the prime field F_p.

Matrices are numpy integer arrays with entries reduced mod p.  Row vectors
span subspaces; ``nullspace`` solves M @ x = 0 for column vectors x and
returns the solutions as rows.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "reduce_mod",
    "rref",
    "rank",
    "nullspace",
    "solve_in_row_space",
    "in_row_space",
    "row_space_equal",
    "row_space_contains",
    "mat_pow",
    "is_invertible",
]


def reduce_mod(mat, p: int) -> np.ndarray:
    """Copy an array-like into int64 with entries in 0..p-1."""
    return np.asarray(mat, dtype=np.int64) % p


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduced echelon form mod p; returns (matrix, pivot columns)."""
    m = reduce_mod(mat, p)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot = -1
        for k in range(r, rows):
            if m[k, c] % p != 0:
                pivot = k
                break
        if pivot < 0:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        for k in range(rows):
            if k != r and m[k, c] % p != 0:
                m[k] = (m[k] - m[k, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank(mat, p: int) -> int:
    """Rank of a matrix over F_p."""
    _, pivots = rref(mat, p)
    return len(pivots)


def nullspace(mat, p: int) -> np.ndarray:
    """Basis of {x : mat @ x = 0 mod p}, one solution per row."""
    m = reduce_mod(mat, p)
    rows, cols = m.shape
    reduced, pivots = rref(m, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-reduced[r, fc]) % p
    return basis


def solve_in_row_space(basis, vec, p: int) -> np.ndarray | None:
    """Coefficients c with c @ basis = vec mod p, or None if vec is outside."""
    b = reduce_mod(basis, p)
    v = reduce_mod(vec, p)
    if b.shape[0] == 0:
        return np.zeros(0, dtype=np.int64) if not v.any() else None
    # Solve b^T c = v by eliminating the augmented system.
    aug = np.concatenate([b.T, v.reshape(-1, 1)], axis=1)
    reduced, pivots = rref(aug, p)
    ncoef = b.shape[0]
    if ncoef in pivots:
        return None
    coeffs = np.zeros(ncoef, dtype=np.int64)
    for r, c in enumerate(pivots):
        coeffs[c] = reduced[r, ncoef]
    return coeffs


def in_row_space(basis, vec, p: int) -> bool:
    """Whether vec lies in the row space of basis over F_p."""
    return solve_in_row_space(basis, vec, p) is not None


def row_space_contains(outer, inner, p: int) -> bool:
    """Whether every row of inner lies in the row space of outer."""
    inner = reduce_mod(inner, p)
    return all(in_row_space(outer, row, p) for row in inner)


def row_space_equal(a, b, p: int) -> bool:
    """Whether two row sets span the same subspace over F_p."""
    ra, _ = rref(a, p)
    rb, _ = rref(b, p)
    ra = ra[~np.all(ra == 0, axis=1)]
    rb = rb[~np.all(rb == 0, axis=1)]
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def mat_pow(mat, k: int, p: int) -> np.ndarray:
    """k-th power of a square matrix mod p (k >= 0)."""
    m = reduce_mod(mat, p)
    n = m.shape[0]
    out = np.eye(n, dtype=np.int64)
    base = m.copy()
    while k > 0:
        if k & 1:
            out = (out @ base) % p
        base = (base @ base) % p
        k >>= 1
    return out


def is_invertible(mat, p: int) -> bool:
    """Whether a square matrix is invertible over F_p."""
    m = reduce_mod(mat, p)
    return m.shape[0] == m.shape[1] and rank(m, p) == m.shape[0]
