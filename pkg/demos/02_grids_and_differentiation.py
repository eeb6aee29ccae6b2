"""Gauss-Lobatto collocation on [0, 1] and differentiation matrices.

Run with ``python demos/02_grids_and_differentiation.py``.
"""
import numpy as np

from pseudospec import DiffMatrices, gauss_lobatto_grid, interpolate

# Interior nodes are roots of C_{N-1}^{alpha+1}(u), mapped from u in [-1, 1] by x = (u+1)/2
grid = gauss_lobatto_grid(7, 0.5)
print("x nodes:", np.round(grid.nodes_x, 6))
print("u nodes:", np.round(grid.nodes_u, 6))

# The nodes cluster near the endpoints, which tames the Runge phenomenon
runge = lambda s: 1 / (1 + 25 * (2 * s - 1) ** 2)
fine = np.linspace(0, 1, 1001)
for N in (8, 16, 32):
    g = gauss_lobatto_grid(N, 0.5)
    uniform = np.linspace(0, 1, N + 1)
    err_gl = np.max(np.abs(interpolate(g, runge(g.nodes_x), fine) - runge(fine)))
    err_eq = np.max(np.abs(interpolate(uniform, runge(uniform), fine) - runge(fine)))
    print(f"N={N:2d}: Gauss-Lobatto error {err_gl:.2e}, equispaced error {err_eq:.2e}")

# Differentiation matrices act on nodal values
D = DiffMatrices.from_grid(grid)
x = grid.nodes_x
print("D1 x^3 - 3x^2:", np.max(np.abs(D.d1 @ x**3 - 3 * x**2)))
print("D2 x^3 - 6x  :", np.max(np.abs(D.d2 @ x**3 - 6 * x)))

# Smooth non-polynomial data converges spectrally
for N in (4, 8, 12, 16):
    g = gauss_lobatto_grid(N, 0.5)
    d = DiffMatrices.from_grid(g)
    print(f"N={N:2d}: max |D1 exp(x) - exp(x)| = {np.max(np.abs(d.d1 @ np.exp(g.nodes_x) - np.exp(g.nodes_x))):.2e}")
