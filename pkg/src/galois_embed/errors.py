"""Exception hierarchy shared by all modules."""


class GaloisEmbedError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(GaloisEmbedError, ValueError):
    """Input violates a documented precondition (CLI exit code 1)."""


class BudgetExceeded(GaloisEmbedError):
    """A configurable work budget ran out (CLI exit code 2)."""


class FactorBudgetExceeded(BudgetExceeded):
    pass


class SearchBudgetExceeded(BudgetExceeded):
    pass


class EvenizeDegenerate(BudgetExceeded):
    pass


class ParseError(InvalidInput):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class WrongDegree(InvalidInput):
    pass


class DiscriminantClassMismatch(InvalidInput):
    pass


class SingularCurve(InvalidInput):
    pass


class DegenerateParameter(InvalidInput):
    pass


class AnisotropyViolated(InvalidInput):
    pass


class DivideByZeroSeries(GaloisEmbedError, ZeroDivisionError):
    pass


class Obstructed(GaloisEmbedError):
    """The embedding problem has a nontrivial obstruction (CLI exit code 3)."""

    def __init__(self, report):
        super().__init__(f"embedding problem obstructed: {report.arguments} -> {report.global_symbol}")
        self.report = report


class UnsupportedCase(GaloisEmbedError):
    """Construction not available for this case (CLI exit code 4)."""


class ImpossibleClass(GaloisEmbedError):
    """Classification reached a branch excluded by the discriminant condition."""


class UnrecognizedGroup(GaloisEmbedError):
    pass
