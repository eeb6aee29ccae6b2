"""Small dense linear-algebra kernel on numpy arrays.

Matrices are 2-D float arrays and vectors 1-D float arrays; the functions
here add the shape/finiteness checks and the singularity contract the
collocation solver relies on.
"""
from __future__ import annotations

import numpy as np

from .errors import NumericalError, SingularMatrixError, SizeError

__all__ = ["as_matrix", "as_vector", "matmul", "diag_scale", "lu_factor", "lu_solve"]

SINGULAR_RTOL = 1e-14


def as_matrix(a):
    m = np.array(a, dtype=float, ndmin=2)
    if m.ndim != 2:
        raise SizeError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NumericalError("matrix has non-finite entries")
    return m


def as_vector(v):
    v = np.array(v, dtype=float)
    if v.ndim != 1:
        raise SizeError(f"expected a 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise NumericalError("vector has non-finite entries")
    return v


def matmul(A, B):
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise SizeError(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def diag_scale(d, M):
    """``diag(d) @ M`` without forming the diagonal matrix."""
    d, M = as_vector(d), as_matrix(M)
    if d.size != M.shape[0]:
        raise SizeError(f"scale vector of length {d.size} does not match {M.shape[0]} rows")
    return d[:, None] * M


def lu_factor(A):
    """LU factorization with partial pivoting, ``P A = L U``.

    Returns ``(lu, perm)`` with the unit-lower factor below the diagonal of
    ``lu`` and ``perm[i]`` the original row now in position i.  A pivot with
    magnitude below ``1e-14 * ||A||_inf`` raises SingularMatrixError.
    """
    lu = as_matrix(A).copy()
    n, m = lu.shape
    if n != m:
        raise SizeError(f"LU needs a square matrix, got {lu.shape}")
    tol = SINGULAR_RTOL * np.max(np.abs(lu).sum(axis=1), initial=0.0)
    perm = np.arange(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) <= tol or lu[p, k] == 0.0:
            raise SingularMatrixError(k, lu[p, k])
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm


def lu_solve(A, b):
    """Solve ``A x = b`` by LU with partial pivoting."""
    b = as_vector(b)
    lu, perm = lu_factor(A)
    n = lu.shape[0]
    if b.size != n:
        raise SizeError(f"right-hand side has length {b.size}, expected {n}")
    y = b[perm].copy()
    for i in range(1, n):
        y[i] -= lu[i, :i] @ y[:i]
    for i in range(n - 1, -1, -1):
        y[i] = (y[i] - lu[i, i + 1:] @ y[i + 1:]) / lu[i, i]
    return y
