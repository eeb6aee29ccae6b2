"""Spectral collocation toolkit: orthogonal polynomials, Gauss-Lobatto grids,
differentiation matrices and a Crank-Nicolson Fokker-Planck solver."""
from .errors import (
    DegenerateGridError,
    DomainError,
    NumericalError,
    SingularMatrixError,
    SizeError,
    UnsupportedOrderError,
)
from .orthopoly import (
    EvalRequest,
    Kind,
    PolynomialFamily,
    family_eval,
    gamma_fn,
    gegenbauer_eval,
    jacobi_eval,
)
from .grids import CollocationGrid, gauss_lobatto_grid, polynomial_roots
from .interp import DiffMatrices, barycentric_weights, diff_matrix, interpolate, lagrange_eval
from .densela import diag_scale, lu_solve, matmul
from .fpsolver import (
    FokkerPlanckProblem,
    SchemeConfig,
    SolverState,
    convergence_study,
    exact_solution,
    run,
)

__version__ = "0.1.0"
