"""Classical orthogonal polynomials on [-1, 1] and their first two derivatives.

Every family is a special case of the Jacobi polynomials ``P_n^(a,b)``.
Gegenbauer polynomials get their own three-term recurrence; the Chebyshev
kinds and Legendre are evaluated through their Jacobi reduction, rescaled to
their customary normalization.

All evaluators accept a scalar or an array for ``x`` and return the same
shape (a Python float for scalar input).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedOrderError

__all__ = [
    "Kind",
    "PolynomialFamily",
    "EvalRequest",
    "gamma_fn",
    "log_gamma",
    "gegenbauer_eval",
    "gegenbauer_endpoint",
    "gegenbauer_explicit",
    "jacobi_eval",
    "family_eval",
]

# math.gamma overflows just above 171
_LOG_DOMAIN_THRESHOLD = 30.0


def _check_pole(x):
    if x <= 0 and float(x).is_integer():
        raise DomainError(f"gamma function has a pole at {x}")


def gamma_fn(x: float) -> float:
    """Gamma function; raises DomainError at 0, -1, -2, ..."""
    _check_pole(x)
    if x > 171.0:
        raise OverflowError(f"gamma({x}) overflows double precision; use log_gamma")
    return math.gamma(x)


def log_gamma(x: float) -> float:
    """log|Gamma(x)|, finite for arguments far beyond the range of gamma_fn."""
    _check_pole(x)
    return math.lgamma(x)


def _gamma_ratio(num, den):
    """prod(Gamma(num)) / prod(Gamma(den)), in log domain for large arguments."""
    if max(list(num) + list(den)) > _LOG_DOMAIN_THRESHOLD:
        if any(v <= 0 for v in list(num) + list(den)):
            raise DomainError("log-domain gamma ratio needs positive arguments")
        return math.exp(sum(map(log_gamma, num)) - sum(map(log_gamma, den)))
    out = 1.0
    for v in num:
        out *= gamma_fn(v)
    for v in den:
        out /= gamma_fn(v)
    return out


def _check_order(k):
    if k not in (0, 1, 2):
        raise UnsupportedOrderError(f"derivative order must be 0, 1 or 2, got {k}")


def _check_degree(n):
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n}")


def _wrap(x, values):
    return float(values) if np.ndim(x) == 0 else values


def _gegenbauer_values(n, alpha, x):
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = 2.0 * alpha * x
    for m in range(2, n + 1):
        p0, p1 = p1, (2.0 * (m + alpha - 1.0) * x * p1 - (m + 2.0 * alpha - 2.0) * p0) / m
    return p1


def gegenbauer_eval(N: int, alpha: float, x, k: int = 0):
    """k-th derivative of the Gegenbauer polynomial ``C_N^alpha`` at ``x``.

    Uses ``m C_m = 2x(m+alpha-1) C_{m-1} - (m+2alpha-2) C_{m-2}`` and the
    parameter-raising identity ``d/dx C_N^alpha = 2 alpha C_{N-1}^{alpha+1}``.
    """
    if not alpha > 0:
        raise DomainError(f"Gegenbauer parameter must be > 0, got {alpha}")
    _check_order(k)
    _check_degree(N)
    xa = np.asarray(x, dtype=float)
    if k > N:
        return _wrap(x, np.zeros_like(xa))
    scale = 1.0
    for j in range(k):
        scale *= 2.0 * (alpha + j)
    return _wrap(x, scale * _gegenbauer_values(N - k, alpha + k, xa))


def gegenbauer_endpoint(N: int, alpha: float) -> float:
    """``C_N^alpha(1) = Gamma(N+2alpha) / (Gamma(2alpha) Gamma(N+1))``."""
    if not alpha > 0:
        raise DomainError(f"Gegenbauer parameter must be > 0, got {alpha}")
    _check_degree(N)
    return _gamma_ratio([N + 2.0 * alpha], [2.0 * alpha, N + 1.0])


def gegenbauer_explicit(N: int, alpha: float, x):
    """Direct alternating power sum for ``C_N^alpha``.

    Loses digits to cancellation as N grows; kept as a small-N cross-check
    for the recurrence.
    """
    if not alpha > 0:
        raise DomainError(f"Gegenbauer parameter must be > 0, got {alpha}")
    _check_degree(N)
    xa = np.asarray(x, dtype=float)
    total = np.zeros_like(xa)
    for i in range(N // 2 + 1):
        coef = gamma_fn(N + alpha - i) / (
            math.factorial(i) * math.factorial(N - 2 * i) * gamma_fn(alpha)
        )
        total = total + (-1) ** i * coef * (2.0 * xa) ** (N - 2 * i)
    return _wrap(x, total)


def _jacobi_values(n, a, b, x):
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0
    for m in range(2, n + 1):
        s = 2.0 * m + a + b
        c1 = 2.0 * m * (m + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b)
        c3 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s
        p0, p1 = p1, (c2 * p1 - c3 * p0) / c1
    return p1


def _check_jacobi(a, b):
    if not (a > -1 and b > -1):
        raise DomainError(f"Jacobi parameters must exceed -1, got a={a}, b={b}")


def jacobi_eval(n: int, a: float, b: float, x, k: int = 0):
    """k-th derivative of the Jacobi polynomial ``P_n^(a,b)`` at ``x``.

    ``d/dx P_n^(a,b) = (n+a+b+1)/2 * P_{n-1}^(a+1,b+1)``.
    """
    _check_jacobi(a, b)
    _check_order(k)
    _check_degree(n)
    xa = np.asarray(x, dtype=float)
    if k > n:
        return _wrap(x, np.zeros_like(xa))
    scale = 1.0
    for j in range(k):
        scale *= (n + a + b + 1.0 + j) / 2.0
    return _wrap(x, scale * _jacobi_values(n - k, a + k, b + k, xa))


class Kind(enum.Enum):
    JACOBI = "jacobi"
    GEGENBAUER = "gegenbauer"
    CHEBYSHEV_FIRST = "chebyshev1"
    CHEBYSHEV_SECOND = "chebyshev2"
    CHEBYSHEV_THIRD = "chebyshev3"
    CHEBYSHEV_FOURTH = "chebyshev4"
    LEGENDRE = "legendre"


# Jacobi parameters (a, b) of the fixed-parameter families
_FIXED_JACOBI = {
    Kind.CHEBYSHEV_FIRST: (-0.5, -0.5),
    Kind.CHEBYSHEV_SECOND: (0.5, 0.5),
    Kind.CHEBYSHEV_THIRD: (-0.5, 0.5),
    Kind.CHEBYSHEV_FOURTH: (0.5, -0.5),
    Kind.LEGENDRE: (0.0, 0.0),
}


@dataclass(frozen=True)
class PolynomialFamily:
    """A classical orthogonal polynomial family.

    Build instances with the named constructors, e.g.
    ``PolynomialFamily.gegenbauer(1.5)`` or ``PolynomialFamily.chebyshev(2)``.
    ``a``/``b`` are only meaningful for Jacobi, ``alpha`` for Gegenbauer.
    """

    kind: Kind
    a: float = 0.0
    b: float = 0.0
    alpha: float = 0.0

    def __post_init__(self):
        if self.kind is Kind.JACOBI:
            _check_jacobi(self.a, self.b)
        elif self.kind is Kind.GEGENBAUER and not self.alpha > 0:
            raise DomainError(f"Gegenbauer parameter must be > 0, got {self.alpha}")

    @classmethod
    def jacobi(cls, a, b):
        return cls(Kind.JACOBI, a=float(a), b=float(b))

    @classmethod
    def gegenbauer(cls, alpha):
        return cls(Kind.GEGENBAUER, alpha=float(alpha))

    @classmethod
    def chebyshev(cls, kind=1):
        kinds = {
            1: Kind.CHEBYSHEV_FIRST,
            2: Kind.CHEBYSHEV_SECOND,
            3: Kind.CHEBYSHEV_THIRD,
            4: Kind.CHEBYSHEV_FOURTH,
        }
        if kind not in kinds:
            raise DomainError(f"Chebyshev kind must be 1..4, got {kind}")
        return cls(kinds[kind])

    @classmethod
    def legendre(cls):
        return cls(Kind.LEGENDRE)

    def jacobi_parameters(self):
        """The (a, b) of the equivalent Jacobi family."""
        if self.kind is Kind.JACOBI:
            return self.a, self.b
        if self.kind is Kind.GEGENBAUER:
            return self.alpha - 0.5, self.alpha - 0.5
        return _FIXED_JACOBI[self.kind]

    def jacobi_scale(self, n):
        """Constant c_n with ``family_n(x) = c_n * P_n^(a,b)(x)``."""
        _check_degree(n)
        a, b = self.jacobi_parameters()
        if self.kind in (Kind.JACOBI, Kind.LEGENDRE):
            return 1.0
        if self.kind is Kind.GEGENBAUER:
            al = self.alpha
            return _gamma_ratio([al + 0.5, n + 2.0 * al], [2.0 * al, n + al + 0.5])
        # P_n^(a,b)(1) = Gamma(n+a+1) / (Gamma(a+1) n!)
        inv_at_one = _gamma_ratio([a + 1.0, n + 1.0], [n + a + 1.0])
        if self.kind in (Kind.CHEBYSHEV_FIRST, Kind.CHEBYSHEV_THIRD):
            return inv_at_one
        if self.kind is Kind.CHEBYSHEV_SECOND:
            return (n + 1.0) * inv_at_one
        return (2.0 * n + 1.0) * inv_at_one

    def monic_recurrence(self, n):
        """Diagonal and squared off-diagonal of the n x n Jacobi matrix.

        The eigenvalues of the symmetric tridiagonal matrix with diagonal
        ``diag`` and off-diagonal ``sqrt(offdiag_sq)`` are the n roots of the
        degree-n member.
        """
        a, b = self.jacobi_parameters()
        k = np.arange(n, dtype=float)
        s = 2.0 * k + a + b
        diag = np.empty(n)
        diag[0] = (b - a) / (a + b + 2.0)
        diag[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2.0))
        k = np.arange(1, n, dtype=float)
        s = 2.0 * k + a + b
        offdiag_sq = np.empty(n - 1)
        if n > 1:
            # k = 1 written with the (1+a+b) factors cancelled; they vanish for a+b = -1
            offdiag_sq[0] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) ** 2 * (3.0 + a + b))
            kk, ss = k[1:], s[1:]
            offdiag_sq[1:] = (
                4.0 * kk * (kk + a) * (kk + b) * (kk + a + b)
                / (ss ** 2 * (ss + 1.0) * (ss - 1.0))
            )
        return diag, offdiag_sq

    def __call__(self, n, x, k=0):
        return family_eval(EvalRequest(self, n, k, x))


@dataclass(frozen=True)
class EvalRequest:
    family: PolynomialFamily
    degree: int
    derivative_order: int
    point: object

    def __post_init__(self):
        _check_degree(self.degree)
        _check_order(self.derivative_order)


def family_eval(req: EvalRequest):
    """Evaluate ``req.family`` of degree ``req.degree`` (or its derivative)."""
    fam, n, k = req.family, req.degree, req.derivative_order
    if fam.kind is Kind.GEGENBAUER:
        return gegenbauer_eval(n, fam.alpha, req.point, k)
    a, b = fam.jacobi_parameters()
    val = jacobi_eval(n, a, b, req.point, k)
    if fam.kind in (Kind.JACOBI, Kind.LEGENDRE):
        return val
    return fam.jacobi_scale(n) * val
