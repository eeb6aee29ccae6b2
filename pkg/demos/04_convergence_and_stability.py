"""Temporal convergence of the theta scheme, and its step-size limit.

Run with ``python demos/04_convergence_and_stability.py``.
"""
from pseudospec import SchemeConfig, convergence_study, run


def show(rows):
    for dt, err, order in rows:
        print(f"  dt = {dt:.2e}  err = {err:.3e}  order = {'' if order is None else f'{order:.3f}'}")


# Crank-Nicolson (theta = 1/2) is second order; implicit Euler (theta = 1) first order
for theta in (0.5, 1.0):
    print(f"theta = {theta}, N = 3")
    show(convergence_study(SchemeConfig(N=3, theta=theta, dt=1e-3)))

# The coefficients are frozen at the old time level, so the y_xx term inside
# them is explicit.  That imposes a step limit that shrinks roughly like N^-4.
print("\nlargest stable dt probe, theta = 0.5")
for N in (3, 5, 7, 9):
    stable = [dt for dt in (8e-3, 4e-3, 2e-3, 1e-3, 5e-4, 2.5e-4)
              if run(SchemeConfig(N=N, dt=dt)).final.max_abs_err < 1e-5]
    print(f"  N = {N}: largest stable dt among probes = {max(stable) if stable else 'none'}")

print("\ntheta = 0.5, N = 7, inside the stable range")
show(convergence_study(SchemeConfig(N=7, dt=2.5e-4)))
