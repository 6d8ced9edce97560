"""Exception types shared across the package."""


class HZError(Exception):
    """Base class for all errors raised by hzfock."""


class SeriesError(HZError, ValueError):
    pass


class WindowError(SeriesError):
    """A coefficient was requested outside the exactly known window."""


class NonInvertibleError(SeriesError):
    pass


class GuardrailError(HZError, ValueError):
    """A brute-force computation was asked to run beyond its size limit."""


class DomainError(HZError, ValueError):
    """Invalid genus / polygon size at the API boundary."""


class DivergentExpectation(HZError, ArithmeticError):
    """The pipeline reached <E_0(0)>, whose value 1/varsigma(0) is undefined."""


class ParseError(HZError, ValueError):
    def __init__(self, message: str, position: int, expected: str):
        super().__init__(f"{message} at position {position} (expected {expected})")
        self.position = position
        self.expected = expected
