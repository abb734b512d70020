"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    pass


class InvalidSpec(ValueError):
    """A constructor was given parameters that violate its contract."""


class EvaluationError(ArithmeticError):
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class PreconditionViolation(ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NoInverseError(ValueError):
    """A horizontal cut never reaches the neutral element."""


class NotFound(KeyError):
    pass
