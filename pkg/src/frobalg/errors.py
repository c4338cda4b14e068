"""Exception types shared across the package."""


class FrobalgError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(FrobalgError, ValueError):
    pass


class AlgebraMismatch(FrobalgError, ValueError):
    pass


class PolySyntaxError(FrobalgError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotSeparable(FrobalgError):
    def __init__(self, f, gcd):
        super().__init__(f"{f} is not separable: gcd(f, f') = {gcd}")
        self.poly = f
        self.gcd = gcd


class ResidueNotInIdeal(FrobalgError):
    pass


class NotAnIdeal(FrobalgError):
    pass


class NotNilpotent(FrobalgError):
    def __init__(self, message, stable=None):
        super().__init__(message)
        # the nonzero subspace at which the ideal powers stabilized
        self.stable = stable


class NotApplicable(FrobalgError):
    pass


class CatalogError(FrobalgError, ValueError):
    pass


class InvalidAlgebra(FrobalgError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class VerificationError(FrobalgError, AssertionError):
    """An internal post-condition check failed."""
