import math

import numpy as np
import pytest

from pseudospec.errors import DomainError, SizeError
from pseudospec.grids import CollocationGrid, gauss_lobatto_grid, polynomial_roots
from pseudospec.orthopoly import PolynomialFamily, gegenbauer_eval


def _max_abs_on_interval(fam, n):
    return np.max(np.abs(fam(n, np.linspace(-1, 1, 2001))))


class TestRoots:
    def test_examples(self):
        assert polynomial_roots(PolynomialFamily.gegenbauer(1.5), 1) == pytest.approx([0.0], abs=1e-15)
        s = 1 / math.sqrt(3)
        assert polynomial_roots(PolynomialFamily.legendre(), 2) == pytest.approx([-s, s], abs=1e-15)
        expected = sorted(math.cos((2 * k - 1) * math.pi / 8) for k in range(1, 5))
        assert polynomial_roots(PolynomialFamily.chebyshev(1), 4) == pytest.approx(expected, abs=1e-15)

    @pytest.mark.parametrize(
        "fam",
        [
            PolynomialFamily.legendre(),
            PolynomialFamily.chebyshev(1),
            PolynomialFamily.chebyshev(2),
            PolynomialFamily.chebyshev(3),
            PolynomialFamily.chebyshev(4),
            PolynomialFamily.gegenbauer(0.25),
            PolynomialFamily.gegenbauer(3.0),
            PolynomialFamily.jacobi(0.3, -0.6),
            PolynomialFamily.jacobi(2.0, 0.5),
        ],
        ids=str,
    )
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 20])
    def test_residual_and_ordering(self, fam, n):
        r = polynomial_roots(fam, n)
        assert r.shape == (n,)
        assert np.all(np.diff(r) > 0)
        assert np.all((r > -1) & (r < 1))
        assert np.max(np.abs(fam(n, r))) <= 1e-11 * _max_abs_on_interval(fam, n)

    @pytest.mark.parametrize("kind", [1, 2, 3, 4])
    def test_chebyshev_closed_forms(self, kind):
        n = 9
        k = np.arange(1, n + 1)
        closed = {
            1: np.cos((2 * k - 1) * np.pi / (2 * n)),
            2: np.cos(k * np.pi / (n + 1)),
            3: np.cos((2 * k - 1) * np.pi / (2 * n + 1)),
            4: np.cos(2 * k * np.pi / (2 * n + 1)),
        }[kind]
        assert polynomial_roots(PolynomialFamily.chebyshev(kind), n) == pytest.approx(np.sort(closed), abs=1e-14)

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_interlacing(self, alpha):
        fam = PolynomialFamily.gegenbauer(alpha)
        for n in range(1, 21):
            lo, hi = polynomial_roots(fam, n), polynomial_roots(fam, n + 1)
            assert np.all(hi[:-1] < lo) and np.all(lo < hi[1:])

    def test_bad_degree(self):
        with pytest.raises(DomainError):
            polynomial_roots(PolynomialFamily.legendre(), 0)


class TestGaussLobatto:
    def test_three_nodes(self):
        g = gauss_lobatto_grid(2, 0.5)
        assert list(g.nodes_x) == [0.0, 0.5, 1.0]
        assert list(g.nodes_u) == [-1.0, 0.0, 1.0]

    def test_four_nodes_quadratic_oracle(self):
        # C_2^{1.5}(u) = 2(1.5)(2.5) u^2 - 1.5
        u = math.sqrt(1.5 / 7.5)
        g = gauss_lobatto_grid(3, 0.5)
        assert g.nodes_u[1:-1] == pytest.approx([-u, u], abs=1e-15)
        assert g.nodes_x[1:-1] == pytest.approx([0.2763932022500210, 0.7236067977499790], abs=1e-15)

    def test_fig5_grid(self):
        g = gauss_lobatto_grid(7, 0.5)
        assert len(g) == 8 and g.N == 7
        assert g.nodes_x[0] == 0.0 and g.nodes_x[-1] == 1.0
        assert np.all(np.diff(g.nodes_x) > 0)
        assert np.max(np.abs(g.nodes_u + g.nodes_u[::-1])) <= 1e-12

    @pytest.mark.parametrize("alpha", [0.5, 1.0])
    @pytest.mark.parametrize("N", list(range(2, 33)))
    def test_invariants(self, N, alpha):
        g = gauss_lobatto_grid(N, alpha)
        assert g.nodes_x[0] == 0.0 and g.nodes_x[-1] == 1.0
        assert np.all(np.diff(g.nodes_x) > 0)
        assert np.array_equal(g.nodes_u, 2.0 * g.nodes_x - 1.0)
        assert np.max(np.abs(g.nodes_u + g.nodes_u[::-1])) <= 1e-12
        res = gegenbauer_eval(N - 1, alpha + 1, g.nodes_u[1:-1])
        assert np.max(np.abs(res)) <= 1e-10

    def test_legendre_lobatto_nodes(self):
        # alpha = 1/2 interior nodes are the roots of P_N'
        N = 6
        g = gauss_lobatto_grid(N, 0.5)
        dP = np.polynomial.legendre.Legendre.basis(N).deriv()
        assert g.nodes_u[1:-1] == pytest.approx(np.sort(dP.roots()), abs=1e-13)

    def test_immutable(self):
        g = gauss_lobatto_grid(4, 0.5)
        with pytest.raises(ValueError):
            g.nodes_x[1] = 0.3

    @pytest.mark.parametrize("N", [0, 1])
    def test_too_small(self, N):
        with pytest.raises(SizeError):
            gauss_lobatto_grid(N, 0.5)

    def test_bad_alpha(self):
        with pytest.raises(DomainError):
            gauss_lobatto_grid(4, 0.0)


class TestFromNodes:
    def test_valid(self):
        g = CollocationGrid.from_nodes([0, 0.3, 1])
        assert g.N == 2 and g.alpha is None

    @pytest.mark.parametrize("nodes", [[0.1, 0.5, 1], [0, 0.5, 0.9], [0, 0.6, 0.4, 1]])
    def test_invalid(self, nodes):
        with pytest.raises(DomainError):
            CollocationGrid.from_nodes(nodes)
