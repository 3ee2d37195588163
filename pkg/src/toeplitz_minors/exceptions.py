"""Exception types raised across the package."""


class PreconditionError(ValueError):
    """An argument violates an operation's documented precondition."""


class TruncationRangeError(IndexError):
    """A Fourier coefficient index falls outside the computed truncation."""

    def __init__(self, index: int, bound: int):
        self.index = index
        self.bound = bound
        super().__init__(
            f"Fourier coefficient d_{index} is outside the truncation range "
            f"[-{bound}, {bound}]"
        )


class SingularDenominatorError(ArithmeticError):
    """det(M_n) is numerically zero, so the minor ratio is undefined."""

    def __init__(self, n: int, detail: str = ""):
        self.n = n
        msg = f"Toeplitz matrix of size {n} is numerically singular"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
