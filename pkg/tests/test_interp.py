import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pseudospec.errors import DegenerateGridError, SizeError, UnsupportedOrderError
from pseudospec.grids import CollocationGrid, gauss_lobatto_grid
from pseudospec.interp import DiffMatrices, barycentric_weights, diff_matrix, interpolate, lagrange_eval

from oracles import lagrange_product, vandermonde_derivative_matrix

THREE = CollocationGrid.from_nodes([0.0, 0.5, 1.0])


class TestWeights:
    def test_three_nodes(self):
        assert list(barycentric_weights(THREE)) == [0.5, -1.0, 0.5]

    def test_two_nodes(self):
        assert list(barycentric_weights([0.0, 1.0])) == [-1.0, 1.0]

    def test_symmetric_grid(self):
        w = barycentric_weights(gauss_lobatto_grid(9, 1.0))
        assert np.allclose(np.abs(w), np.abs(w[::-1]), rtol=1e-12)
        assert np.max(np.abs(w)) == 1.0

    def test_duplicates(self):
        with pytest.raises(DegenerateGridError):
            barycentric_weights([0.0, 0.5, 0.5, 1.0])

    def test_large_grid_no_underflow(self):
        w = barycentric_weights(gauss_lobatto_grid(64, 0.5))
        assert np.all(np.isfinite(w)) and np.all(w != 0)


class TestLagrange:
    def test_examples(self):
        assert lagrange_eval(THREE, 1, 0.5) == 1.0
        assert lagrange_eval(THREE, 0, 1.0) == 0.0
        assert lagrange_eval(THREE, 1, 0.25) == pytest.approx(0.75, abs=1e-15)

    @pytest.mark.parametrize("N", [2, 5, 7, 16])
    def test_cardinal_bit_exact(self, N):
        g = gauss_lobatto_grid(N, 0.5)
        for i in range(N + 1):
            vals = lagrange_eval(g, i, g.nodes_x)
            assert np.array_equal(vals, np.eye(N + 1)[i])

    @settings(max_examples=50, deadline=None)
    @given(x=st.floats(0, 1), i=st.integers(0, 7))
    def test_matches_product_formula(self, x, i):
        g = gauss_lobatto_grid(7, 0.5)
        assert lagrange_eval(g, i, x) == pytest.approx(lagrange_product(g.nodes_x, i, x), abs=1e-12)

    def test_index_bounds(self):
        with pytest.raises(IndexError):
            lagrange_eval(THREE, 3, 0.2)


class TestInterpolate:
    @pytest.mark.parametrize("N", [2, 3, 7, 12])
    def test_quadratic_reproduction(self, N):
        g = gauss_lobatto_grid(N, 0.5)
        assert interpolate(g, g.nodes_x**2, 0.3) == pytest.approx(0.09, abs=1e-14)

    @settings(max_examples=30, deadline=None)
    @given(x=st.floats(0, 1))
    def test_partition_of_unity(self, x):
        g = gauss_lobatto_grid(9, 1.0)
        assert interpolate(g, np.ones(10), x) == pytest.approx(1.0, abs=1e-14)

    def test_degree_n_exactness(self):
        g = gauss_lobatto_grid(7, 0.5)
        assert interpolate(g, g.nodes_x**7, 0.42) == pytest.approx(0.42**7, abs=1e-14)

    def test_exact_at_nodes_and_vectorized(self):
        g = gauss_lobatto_grid(6, 0.5)
        v = np.sin(3 * g.nodes_x)
        assert np.array_equal(interpolate(g, v, g.nodes_x), v)

    def test_length_mismatch(self):
        with pytest.raises(SizeError):
            interpolate(THREE, [1.0, 2.0], 0.3)


class TestDiffMatrix:
    def test_three_node_first(self):
        assert diff_matrix(THREE, 1).tolist() == [[-3, 4, -1], [-1, 0, 1], [1, -4, 3]]

    def test_three_node_second(self):
        assert diff_matrix(THREE, 2).tolist() == [[4, -8, 4]] * 3

    def test_unsupported_order(self):
        with pytest.raises(UnsupportedOrderError):
            diff_matrix(THREE, 3)
        with pytest.raises(SizeError):
            diff_matrix([0.0, 1.0], 2)

    @pytest.mark.parametrize("N", [1, 2, 5, 16, 40])
    def test_constants(self, N):
        d = diff_matrix(gauss_lobatto_grid(max(N, 2), 0.5) if N > 1 else [0.0, 1.0], 1)
        rows = np.abs(d).sum(axis=1)
        assert np.all(np.abs(d @ np.ones(d.shape[0])) <= 1e-9 * rows)

    @pytest.mark.parametrize("N", [3, 5, 7])
    def test_against_vandermonde(self, N):
        g = gauss_lobatto_grid(N, 0.5)
        assert np.allclose(diff_matrix(g, 1), vandermonde_derivative_matrix(g.nodes_x), atol=1e-9)

    @pytest.mark.parametrize("N", [3, 7, 16])
    def test_monomial_exactness(self, N):
        g = gauss_lobatto_grid(N, 0.5)
        D = DiffMatrices.from_grid(g)
        x = g.nodes_x
        for m in range(N + 1):
            d1 = m * x ** max(m - 1, 0) if m else np.zeros_like(x)
            d2 = m * (m - 1) * x ** max(m - 2, 0) if m > 1 else np.zeros_like(x)
            assert np.max(np.abs(D.d1 @ x**m - d1)) <= 1e-9 * max(1, m)
            assert np.max(np.abs(D.d2 @ x**m - d2)) <= 1e-9 * max(1, m * (m - 1)) * N**2

    @pytest.mark.parametrize("N", range(2, 17))
    def test_second_is_square(self, N):
        D = DiffMatrices.from_grid(gauss_lobatto_grid(N, 0.5))
        assert np.max(np.abs(D.d2 - D.d1 @ D.d1)) <= 1e-8 * np.linalg.norm(D.d1, np.inf) ** 2
        assert not D.d1.flags.writeable
