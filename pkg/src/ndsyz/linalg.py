"""Exact linear algebra over GF(p).

Dense elimination uses int64 numpy arrays (all products stay below 2**62 for
p < 2**31).  Matrices wider than ``DENSE_COLUMN_LIMIT`` go through a sparse
dict-of-rows elimination instead.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

DENSE_COLUMN_LIMIT = 5000


def _as_array(A, p: int) -> np.ndarray:
    A = np.array(A, dtype=np.int64, copy=True)
    if A.ndim != 2:
        A = A.reshape(len(A), -1) if A.size else np.zeros((0, 0), dtype=np.int64)
    A %= p
    return A


def echelon(A, p: int, reduced: bool = False) -> tuple[np.ndarray, list[int]]:
    """Row echelon form ``E`` (trimmed to its nonzero rows) and pivot columns.

    Pivots are chosen left to right, so with columns sorted by a monomial order
    (largest first) the pivot columns are exactly the leading monomials of the
    row space.
    """
    A = _as_array(A, p)
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = A[r, c:] * inv % p
        rest = r + 1 + np.flatnonzero(A[r + 1:, c])
        if rest.size:
            A[rest, c:] = (A[rest, c:] - np.outer(A[rest, c], A[r, c:])) % p
        if reduced and r:
            above = np.flatnonzero(A[:r, c])
            if above.size:
                A[above, c:] = (A[above, c:] - np.outer(A[above, c], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rref(A, p: int) -> tuple[np.ndarray, list[int]]:
    return echelon(A, p, reduced=True)


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.shape[1] > DENSE_COLUMN_LIMIT:
        return sparse_rank(dense_to_rows(A), p)
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(echelon(A, p)[1])


def inverse(M, p: int) -> np.ndarray:
    M = _as_array(M, p)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    aug = np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1)
    E, piv = rref(aug, p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("singular matrix")
    return E[:n, n:]


def matmul(A, B, p: int) -> np.ndarray:
    """Exact product mod p, chunked so int64 accumulation cannot overflow."""
    A = _as_array(A, p)
    B = _as_array(B, p)
    chunk = max(1, (2**62) // ((p - 1) ** 2) - 1)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(0, A.shape[1], chunk):
        out = (out + A[:, s:s + chunk] @ B[s:s + chunk, :]) % p
    return out


def nullspace(A, p: int) -> np.ndarray:
    """Basis of the right kernel, one vector per row."""
    A = _as_array(A, p)
    m, n = A.shape
    E, piv = rref(A, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(piv):
            basis[k, c] = (-E[r, f]) % p
    return basis


# --------------------------------------------------------------------------- sparse path


def dense_to_rows(A) -> list[dict[int, int]]:
    A = np.asarray(A)
    rows = []
    for r in range(A.shape[0]):
        nz = np.flatnonzero(A[r])
        if nz.size:
            rows.append({int(c): int(A[r, c]) for c in nz})
    return rows


def sparse_rank(rows: Iterable[dict[int, int]], p: int) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``.

    Rows are processed shortest first and reduced against pivots keyed by
    their leading column, which keeps fill-in low on the very sparse Koszul
    and Macaulay matrices this package produces.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in sorted((dict(r) for r in rows), key=len):
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], p - 2, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def rank_any(matrix, p: int) -> int:
    """Rank of either a dense array or a list of sparse rows."""
    if isinstance(matrix, list):
        return sparse_rank(matrix, p)
    return rank(matrix, p)
