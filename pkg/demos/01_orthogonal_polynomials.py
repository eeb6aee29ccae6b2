"""Orthogonal polynomial families and how they relate.

Run with ``python demos/01_orthogonal_polynomials.py``.
"""
import numpy as np

from pseudospec import PolynomialFamily, gegenbauer_eval, jacobi_eval
from pseudospec.orthopoly import gegenbauer_endpoint, gegenbauer_explicit

x = np.linspace(-1, 1, 5)

# Gegenbauer C_N^alpha by recurrence.  alpha = 1/2 gives Legendre.
print("C_4^{1/2}(x) =", gegenbauer_eval(4, 0.5, x))
print("P_4(x)       =", PolynomialFamily.legendre()(4, x))

# Symmetry C_N(-x) = (-1)^N C_N(x) and the closed-form endpoint value
N, alpha = 5, 1.5
print("odd symmetry:", np.allclose(gegenbauer_eval(N, alpha, -x), -gegenbauer_eval(N, alpha, x)))
print("C_5^{1.5}(1) =", gegenbauer_eval(N, alpha, 1.0), "closed form:", gegenbauer_endpoint(N, alpha))

# The explicit power sum agrees with the recurrence at small degree, but it
# cancels catastrophically as the degree grows.
for n in (6, 30, 60):
    gap = np.max(np.abs(gegenbauer_eval(n, 0.5, x) - gegenbauer_explicit(n, 0.5, x)))
    print(f"degree {n:2d}: |recurrence - power sum| = {gap:.2e}")

# Derivatives come from parameter raising: d/dx C_N^a = 2a C_{N-1}^{a+1}
print("C_6^1'(0.3) =", gegenbauer_eval(6, 1.0, 0.3, k=1), "=", 2 * gegenbauer_eval(5, 2.0, 0.3))

# Every family is a rescaled Jacobi polynomial
for fam in (PolynomialFamily.chebyshev(k) for k in (1, 2, 3, 4)):
    a, b = fam.jacobi_parameters()
    n = 4
    print(f"{fam.kind.value}: (a, b) = ({a}, {b}), degree-4 scale {fam.jacobi_scale(n):.4f};",
          "value at 0.3:", fam(n, 0.3), "check:", fam.jacobi_scale(n) * jacobi_eval(n, a, b, 0.3))
