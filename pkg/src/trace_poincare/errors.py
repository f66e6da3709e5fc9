"""Exception types shared across the package."""


class NotDivisible(ArithmeticError):
    """Exact polynomial division was requested but the remainder is nonzero."""


class NoProductForm(ValueError):
    """A cyclotomic exponent vector admits no nonnegative (1-t^i) factorization."""


class ReconstructionFailed(ValueError):
    """Multiplying a series by a candidate denominator left a nonzero tail.

    Either the candidate denominator is too small or the series was not
    computed to a high enough order.  ``first_bad_degree`` is the lowest
    degree past the forced numerator degree with a nonzero coefficient.
    """

    def __init__(self, message: str, first_bad_degree: int):
        super().__init__(message)
        self.first_bad_degree = first_bad_degree


class FunctionalEquationViolated(ValueError):
    """f(1/t) != +- t^(k n^2) f(t); carries the residual polynomial."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class PoleOrderMismatch(ValueError):
    """Pole order at t=1 differs from (k-1) n^2 + 1."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"pole order at t=1 is {actual}, expected {expected}")
        self.expected = expected
        self.actual = actual


class DominanceViolated(ValueError):
    """Some root off t=1 has pole order >= the order at t=1, so the
    single-pole asymptotic estimate does not apply."""
