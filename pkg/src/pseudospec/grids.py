"""Gegenbauer-Gauss-Lobatto collocation grids on [0, 1]."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, SizeError
from .orthopoly import EvalRequest, PolynomialFamily, family_eval

__all__ = ["CollocationGrid", "polynomial_roots", "gauss_lobatto_grid"]


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class CollocationGrid:
    """Nodes ``x_0 = 0 < x_1 < ... < x_N = 1`` and their images ``u = 2x - 1``.

    ``alpha`` is the Gegenbauer parameter the interior nodes came from, or
    None for a grid built from explicit nodes.
    """

    nodes_x: np.ndarray
    nodes_u: np.ndarray
    alpha: float | None
    N: int

    @classmethod
    def from_nodes(cls, nodes_x, alpha=None):
        x = np.asarray(nodes_x, dtype=float)
        if x.ndim != 1 or x.size < 2:
            raise SizeError("a grid needs at least two nodes")
        if x[0] != 0.0 or x[-1] != 1.0:
            raise DomainError("grid endpoints must be exactly 0 and 1")
        if not np.all(np.diff(x) > 0):
            raise DomainError("grid nodes must be strictly increasing")
        return cls(_frozen(x), _frozen(2.0 * x - 1.0), alpha, x.size - 1)

    @property
    def interior_x(self):
        return self.nodes_x[1:-1]

    def __len__(self):
        return self.N + 1


def polynomial_roots(family: PolynomialFamily, n: int, polish: bool = True):
    """The n real roots of the degree-n member of ``family``, increasing.

    Eigenvalues of the symmetric tridiagonal Jacobi matrix, followed by one
    Newton step per root.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"root count must be a positive integer, got {n}")
    diag, offdiag_sq = family.monic_recurrence(n)
    if np.any(offdiag_sq <= 0) or not np.all(np.isfinite(offdiag_sq)):
        raise DomainError(f"degenerate recurrence for {family}")
    if n == 1:
        roots = diag.copy()
    else:
        roots = eigh_tridiagonal(diag, np.sqrt(offdiag_sq), eigvals_only=True)
    if polish:
        p = family_eval(EvalRequest(family, n, 0, roots))
        dp = family_eval(EvalRequest(family, n, 1, roots))
        ok = dp != 0
        roots = np.where(ok, roots - np.where(ok, p / np.where(ok, dp, 1.0), 0.0), roots)
    return np.sort(roots)


def gauss_lobatto_grid(N: int, alpha: float) -> CollocationGrid:
    """Endpoints 0 and 1 plus the N-1 roots of ``C_{N-1}^{alpha+1}(u)`` mapped by x = (u+1)/2."""
    if int(N) != N or N < 2:
        raise SizeError(f"Gauss-Lobatto grid needs N >= 2, got {N}")
    if not alpha > 0:
        raise DomainError(f"Gegenbauer parameter must be > 0, got {alpha}")
    roots = polynomial_roots(PolynomialFamily.gegenbauer(alpha + 1.0), N - 1)
    # the root set is symmetric about 0; enforce it so u stays antisymmetric
    roots = 0.5 * (roots - roots[::-1])
    x = np.concatenate(([0.0], (roots + 1.0) / 2.0, [1.0]))
    u = 2.0 * x - 1.0
    return CollocationGrid(_frozen(x), _frozen(u), float(alpha), int(N))
