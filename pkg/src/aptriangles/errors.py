"""Exception hierarchy shared by all modules."""


class TriangleError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class NonPositiveSide(TriangleError):
    pass


class TriangleInequalityViolation(TriangleError):
    pass


class ZeroOperand(TriangleError):
    pass


class RhoOutOfRange(TriangleError):
    """Shape ratio outside the half-open window (2, 3].

    ``bound`` is ``"lower"`` when rho <= 2 and ``"upper"`` when rho > 3.
    """

    def __init__(self, rho, bound):
        self.rho = rho
        self.bound = bound
        if bound == "lower":
            msg = f"rho={rho} must be > 2"
        else:
            msg = f"rho={rho} must be <= 3"
        super().__init__(msg)


class NonPositive(TriangleError):
    pass


class NotCoprime(TriangleError):
    pass


class ParityViolation(TriangleError):
    pass


class RatioConditionViolation(TriangleError):
    pass


class InvariantError(ArithmeticError):
    """An internal invariant failed; indicates a bug, not bad input."""
