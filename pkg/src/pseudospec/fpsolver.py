"""Crank-Nicolson collocation solver for a nonlinear Fokker-Planck equation.

The model problem on x in [0, 1] is

    y_t = -(A y)_x + (B y)_xx,   A = 4y/x - x/3,   B = y,

with y(x, 0) = x^2, y(0, t) = 0, y(1, t) = e^t and exact solution
y = x^2 e^t.  Expanding the right-hand side gives the quasi-linear form

    y_t = (4y/x^2 - 8y_x/x + 1/3 + 2y_xx) y + (x/3 + 2y_x) y_x.

Each time step freezes both brackets at level n, so it needs one linear
solve: with s1 = dt * (first bracket) and s2 = dt * (second bracket),

    (1 - theta s1) y^{n+1} - theta s2 y_x^{n+1}
        = (1 + (1-theta) s1) y^n + (1-theta) s2 y_x^n

is collocated at the interior nodes of a Gegenbauer-Gauss-Lobatto grid,
and the two boundary values close the system.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .densela import diag_scale, lu_solve
from .errors import DomainError, NumericalError, SingularMatrixError, SizeError
from .grids import CollocationGrid, gauss_lobatto_grid
from .interp import DiffMatrices

__all__ = [
    "FokkerPlanckProblem",
    "SchemeConfig",
    "SolverState",
    "Checkpoint",
    "Trajectory",
    "exact_solution",
    "expanded_rhs_check",
    "coefficient_fields",
    "assemble_system",
    "initial_state",
    "step",
    "time_levels",
    "run",
    "convergence_study",
]


def exact_solution(x, t):
    """``y(x, t) = x^2 e^t``."""
    y = np.asarray(x, dtype=float) ** 2 * np.exp(t)
    return float(y) if np.ndim(y) == 0 else y


def _reaction(x, y, y_x, y_xx):
    return 4.0 * y / x**2 - 8.0 * y_x / x + 1.0 / 3.0 + 2.0 * y_xx


def _advection(x, y, y_x, y_xx):
    return x / 3.0 + 2.0 * y_x


@dataclass(frozen=True)
class FokkerPlanckProblem:
    """Problem data in quasi-linear form ``y_t = reaction * y + advection * y_x``.

    ``drift`` and ``diffusion`` are the A(x, t, y) and B(x, t, y) of the
    conservative form; the solver only uses ``reaction`` and ``advection``.
    The defaults are the model problem described in the module docstring.
    """

    drift: Callable = lambda x, t, y: 4.0 * y / x - x / 3.0
    diffusion: Callable = lambda x, t, y: y
    reaction: Callable = _reaction
    advection: Callable = _advection
    left_bc: Callable = lambda t: 0.0
    right_bc: Callable = lambda t: math.exp(t)
    initial: Callable = lambda x: np.asarray(x, dtype=float) ** 2
    exact: Callable | None = exact_solution


MODEL_PROBLEM = FokkerPlanckProblem()


@dataclass(frozen=True)
class SchemeConfig:
    N: int = 7
    alpha: float = 0.5
    theta: float = 0.5
    dt: float = 1e-3
    t_final: float = 1.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise SizeError(f"N must be an integer >= 2, got {self.N}")
        if not self.alpha > 0:
            raise DomainError(f"alpha must be > 0, got {self.alpha}")
        if not 0.0 <= self.theta <= 1.0:
            raise DomainError(f"theta must lie in [0, 1], got {self.theta}")
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise DomainError(f"dt must be positive, got {self.dt}")
        if not (self.t_final >= 0 and math.isfinite(self.t_final)):
            raise DomainError(f"t_final must be non-negative, got {self.t_final}")


@dataclass(frozen=True)
class SolverState:
    c: np.ndarray
    t: float = 0.0
    step_index: int = 0


def expanded_rhs_check(x: float, t: float) -> float:
    """Residual of the exact solution in the quasi-linear form.

    Uses the analytic derivatives of ``x^2 e^t``; zero up to rounding.
    """
    if x == 0:
        raise DomainError("the quasi-linear form is singular at x = 0")
    e = math.exp(t)
    y, y_t, y_x, y_xx = x * x * e, x * x * e, 2.0 * x * e, 2.0 * e
    return y_t - (_reaction(x, y, y_x, y_xx) * y + _advection(x, y, y_x, y_xx) * y_x)


def coefficient_fields(state, grid: CollocationGrid, D: DiffMatrices, dt, problem=MODEL_PROBLEM):
    """``(v1, v2)`` = s1, s2 at the interior nodes, frozen at ``state``."""
    x = grid.interior_x
    if np.any(x <= 0):
        raise DomainError("interior nodes must be strictly positive")
    c = np.asarray(state.c, dtype=float)
    y = c[1:-1]
    y_x = (D.d1 @ c)[1:-1]
    y_xx = (D.d2 @ c)[1:-1]
    v1 = dt * problem.reaction(x, y, y_x, y_xx)
    v2 = dt * problem.advection(x, y, y_x, y_xx)
    return np.asarray(v1, dtype=float), np.asarray(v2, dtype=float)


def assemble_system(
    v1,
    v2,
    theta,
    grid: CollocationGrid,
    D: DiffMatrices,
    c_n,
    t_next,
    problem=MODEL_PROBLEM,
    explicit_reaction_sign=1.0,
):
    """Collocation matrix and right-hand side for the step to ``t_next``.

    Row 0 and row N pin the boundary values; the interior rows are
    ``diag(m1) A2 - diag(m2) A5`` with A2 the interior-row selector and A5
    the interior rows of D1.  ``explicit_reaction_sign=-1`` flips the sign
    of the explicit reaction weight (``1 - (1-theta) v1``), which is
    inconsistent with the time discretization; it exists for comparison.
    """
    v1, v2 = np.asarray(v1, dtype=float), np.asarray(v2, dtype=float)
    c_n = np.asarray(c_n, dtype=float)
    N = grid.N
    if v1.shape != (N - 1,) or v2.shape != (N - 1,) or c_n.shape != (N + 1,):
        raise SizeError("coefficient fields need length N-1 and the state length N+1")
    if not 0.0 <= theta <= 1.0:
        raise DomainError(f"theta must lie in [0, 1], got {theta}")
    a2 = np.eye(N + 1)[1:-1]
    a5 = D.d1[1:-1]
    m1 = 1.0 - theta * v1
    m2 = theta * v2
    m1_hat = 1.0 + explicit_reaction_sign * (1.0 - theta) * v1
    m2_hat = (1.0 - theta) * v2

    A = np.zeros((N + 1, N + 1))
    A[0, 0] = 1.0
    A[1:-1] = diag_scale(m1, a2) - diag_scale(m2, a5)
    A[N, N] = 1.0
    b = np.empty(N + 1)
    b[0] = problem.left_bc(t_next)
    b[1:-1] = (diag_scale(m1_hat, a2) + diag_scale(m2_hat, a5)) @ c_n
    b[N] = problem.right_bc(t_next)
    return A, b


def initial_state(grid: CollocationGrid, problem=MODEL_PROBLEM) -> SolverState:
    c = np.array(problem.initial(grid.nodes_x), dtype=float)
    return SolverState(c, 0.0, 0)


def step(state, config, grid, D, problem=MODEL_PROBLEM, dt=None, t_next=None, **assemble_kw):
    """Advance one step; ``dt``/``t_next`` override the configured step (for a shortened last step)."""
    dt = config.dt if dt is None else dt
    t_next = state.t + dt if t_next is None else t_next
    v1, v2 = coefficient_fields(state, grid, D, dt, problem)
    A, b = assemble_system(v1, v2, config.theta, grid, D, state.c, t_next, problem, **assemble_kw)
    try:
        c = lu_solve(A, b)
    except SingularMatrixError as exc:
        raise SingularMatrixError(exc.pivot_index, exc.pivot_value, state.step_index + 1) from exc
    if not np.all(np.isfinite(c)):
        raise NumericalError(f"non-finite solution at time step {state.step_index + 1}")
    return SolverState(c, t_next, state.step_index + 1)


def time_levels(dt, t_final):
    """Time levels ``0 = t_0 < ... < t_M = t_final`` with steps ``dt``.

    The last step is shortened if ``dt`` does not divide ``t_final``.
    """
    if t_final == 0:
        return np.array([0.0])
    n = round(t_final / dt)
    if n >= 1 and abs(n * dt - t_final) <= 1e-12 * max(1.0, t_final):
        levels = np.arange(n + 1) * dt
    else:
        n = math.floor(t_final / dt)
        levels = np.arange(n + 1) * dt
        if t_final - levels[-1] > 1e-12 * max(1.0, t_final):
            levels = np.append(levels, t_final)
    levels[-1] = t_final
    return levels


@dataclass(frozen=True)
class Checkpoint:
    t: float
    step_index: int
    x: np.ndarray
    y_num: np.ndarray
    y_exact: np.ndarray | None

    @property
    def abs_err(self):
        if self.y_exact is None:
            return None
        return np.abs(self.y_num - self.y_exact)

    @property
    def max_abs_err(self):
        err = self.abs_err
        return None if err is None else float(np.max(err))


@dataclass(frozen=True)
class Trajectory:
    config: SchemeConfig
    grid: CollocationGrid
    checkpoints: list = field(default_factory=list)
    boundary_defect: float = 0.0

    @property
    def final(self) -> Checkpoint:
        return self.checkpoints[-1]

    @property
    def max_abs_err(self):
        return max(cp.max_abs_err for cp in self.checkpoints)


def _checkpoint(state, grid, problem):
    x = grid.nodes_x
    exact = None if problem.exact is None else np.asarray(problem.exact(x, state.t), dtype=float)
    return Checkpoint(state.t, state.step_index, x, state.c.copy(), exact)


def run(config: SchemeConfig, checkpoints: Sequence[float] | None = None, problem=MODEL_PROBLEM, **assemble_kw):
    """March from t = 0 to ``config.t_final``.

    ``checkpoints`` lists times at which to record the state (each snaps to
    the first time level at or after it); the initial and final states are
    always recorded.  ``boundary_defect`` on the result is the largest
    boundary-value mismatch seen over all steps.
    """
    grid = gauss_lobatto_grid(config.N, config.alpha)
    D = DiffMatrices.from_grid(grid)
    levels = time_levels(config.dt, config.t_final)
    record = {0, len(levels) - 1}
    for tau in () if checkpoints is None else checkpoints:
        if 0 <= tau <= config.t_final:
            idx = int(np.searchsorted(levels, tau - 1e-9 * config.dt))
            record.add(min(idx, len(levels) - 1))

    state = initial_state(grid, problem)
    out = [_checkpoint(state, grid, problem)]
    defect = 0.0
    for n in range(1, len(levels)):
        state = step(
            state, config, grid, D, problem,
            dt=levels[n] - levels[n - 1], t_next=levels[n], **assemble_kw,
        )
        defect = max(
            defect,
            abs(state.c[0] - problem.left_bc(state.t)),
            abs(state.c[-1] - problem.right_bc(state.t)),
        )
        if n in record:
            out.append(_checkpoint(state, grid, problem))
    return Trajectory(config, grid, out, defect)


def convergence_study(config: SchemeConfig, factors=(4, 2, 1), problem=MODEL_PROBLEM):
    """Final-time max nodal error for ``dt = f * config.dt`` over ``factors``.

    Returns rows ``(dt, max_abs_err, observed_order)``; the order is
    ``log2`` of the ratio to the previous row's error and None where it is
    undefined (first row, or a zero error).
    """
    rows = []
    prev = None
    for f in factors:
        dt = f * config.dt
        err = run(replace(config, dt=dt), problem=problem).final.max_abs_err
        order = None
        if prev is not None and prev[1] > 0 and err > 0:
            order = math.log(prev[1] / err) / math.log(prev[0] / dt)
        rows.append((dt, err, order))
        prev = (dt, err)
    return rows
