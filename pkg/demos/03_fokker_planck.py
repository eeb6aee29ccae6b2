"""Nonlinear Fokker-Planck: y_t = -(A y)_x + (B y)_xx with A = 4y/x - x/3, B = y.

Exact solution y = x^2 e^t.  Run with ``python demos/03_fokker_planck.py``.
"""
import numpy as np

from pseudospec import SchemeConfig, run
from pseudospec.fpsolver import expanded_rhs_check

# The quasi-linear form used by the scheme is satisfied by the exact solution
print("expanded-form residual at (0.3, 0.7):", expanded_rhs_check(0.3, 0.7))

cfg = SchemeConfig(N=7, alpha=0.5, theta=0.5, dt=1e-3, t_final=1.0)
traj = run(cfg, checkpoints=np.arange(0, 1.01, 0.25))
for cp in traj.checkpoints:
    print(f"t = {cp.t:.2f}   max nodal error = {cp.max_abs_err:.3e}")

final = traj.final
print("\n   x          y_num              y_exact            abs_err")
for x, yn, ye, e in zip(final.x, final.y_num, final.y_exact, final.abs_err):
    print(f"{x:.6f}  {yn:.15f}  {ye:.15f}  {e:.2e}")

# The exact solution is quadratic in x, so the degree does not matter:
for N in (2, 3, 5, 7):
    print(f"N = {N}: error at t=1 = {run(SchemeConfig(N=N)).final.max_abs_err:.3e}")
