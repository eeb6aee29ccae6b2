"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """Parameter or argument outside the supported mathematical domain."""


class UnsupportedOrderError(ValueError):
    """Derivative order not implemented (only 0, 1 and 2 are)."""


class SizeError(ValueError):
    """Shape or length mismatch, or a grid too small for the request."""


class DegenerateGridError(ValueError):
    """Collocation nodes are not distinct."""


class NumericalError(ArithmeticError):
    """A computation produced a non-finite or otherwise unusable result."""


class SingularMatrixError(NumericalError):
    """LU factorization met a pivot below the singularity threshold.

    ``pivot_index`` is the elimination column that failed; ``step_index`` is
    filled in by the time stepper when the failure happens inside a solve.
    """

    def __init__(self, pivot_index, pivot_value=0.0, step_index=None):
        self.pivot_index = pivot_index
        self.pivot_value = pivot_value
        self.step_index = step_index
        msg = f"singular matrix: pivot {pivot_index} has magnitude {abs(pivot_value):.3e}"
        if step_index is not None:
            msg += f" (time step {step_index})"
        super().__init__(msg)
