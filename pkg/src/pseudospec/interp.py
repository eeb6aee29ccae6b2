"""Barycentric Lagrange interpolation and collocation differentiation matrices.

Functions taking a ``grid`` accept a :class:`CollocationGrid` or a plain
sequence of nodes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateGridError, SizeError, UnsupportedOrderError
from .grids import CollocationGrid

__all__ = [
    "DiffMatrices",
    "barycentric_weights",
    "lagrange_eval",
    "interpolate",
    "diff_matrix",
]


def _nodes(grid):
    if isinstance(grid, CollocationGrid):
        return grid.nodes_x
    return np.asarray(grid, dtype=float)


def barycentric_weights(grid):
    """``w_i = 1 / prod_{j != i} (x_i - x_j)``, scaled so that max |w_i| = 1."""
    x = _nodes(grid)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    if np.any(diff == 0.0):
        raise DegenerateGridError("collocation nodes must be distinct")
    # scale each factor by the interval length to keep the product in range
    scale = 4.0 / max(x[-1] - x[0], np.finfo(float).tiny) if x.size > 1 else 1.0
    w = 1.0 / np.prod(diff * scale, axis=1)
    return w / np.max(np.abs(w))


def _basis_matrix(x_nodes, w, xs):
    """Rows are [L_0(xs_k), ..., L_N(xs_k)] for each evaluation point."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    diff = xs[:, None] - x_nodes[None, :]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        terms = w / diff
        out = terms / terms.sum(axis=1, keepdims=True)
    # on a node, or so close that w / diff overflows: snap to that node
    rows = ~np.isfinite(terms).all(axis=1)
    nearest = np.argmin(np.abs(diff[rows]), axis=1)
    out[rows] = 0.0
    out[np.flatnonzero(rows), nearest] = 1.0
    return out


def lagrange_eval(grid, i: int, x):
    """Cardinal function ``L_i`` at ``x`` (exact Kronecker delta at nodes)."""
    nodes = _nodes(grid)
    if not 0 <= i < nodes.size:
        raise IndexError(f"basis index {i} out of range for {nodes.size} nodes")
    vals = _basis_matrix(nodes, barycentric_weights(nodes), x)[:, i]
    return float(vals[0]) if np.ndim(x) == 0 else vals


def interpolate(grid, values, x):
    """Evaluate the interpolant ``sum_i values[i] * L_i(x)``."""
    nodes = _nodes(grid)
    values = np.asarray(values, dtype=float)
    if values.shape != nodes.shape:
        raise SizeError(f"expected {nodes.size} nodal values, got {values.size}")
    vals = _basis_matrix(nodes, barycentric_weights(nodes), x) @ values
    return float(vals[0]) if np.ndim(x) == 0 else vals


def _first_derivative(x):
    w = barycentric_weights(x)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    d = (w[None, :] / w[:, None]) / diff
    np.fill_diagonal(d, 0.0)
    # negative-sum trick: rows annihilate constants
    np.fill_diagonal(d, -d.sum(axis=1))
    return d


def diff_matrix(grid, order: int = 1):
    """Collocation differentiation matrix of order 1 or 2.

    ``D[j, i] = L_i'(x_j)``; the second-order matrix is ``D @ D``.
    """
    if order not in (1, 2):
        raise UnsupportedOrderError(f"differentiation order must be 1 or 2, got {order}")
    x = _nodes(grid)
    if x.size < order + 1:
        raise SizeError(f"order-{order} differentiation needs at least {order + 1} nodes")
    d1 = _first_derivative(x)
    return d1 if order == 1 else d1 @ d1


@dataclass(frozen=True, eq=False)
class DiffMatrices:
    d1: np.ndarray
    d2: np.ndarray
    grid: CollocationGrid

    @classmethod
    def from_grid(cls, grid: CollocationGrid):
        d1 = diff_matrix(grid, 1)
        d2 = d1 @ d1
        d1.setflags(write=False)
        d2.setflags(write=False)
        return cls(d1, d2, grid)
