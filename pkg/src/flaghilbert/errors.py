"""Exception hierarchy shared by all modules."""


class FlagHilbertError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FlagHilbertError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidRank(DomainError):
    pass


class RankMismatch(DomainError):
    pass


class NegativeCoefficient(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class BadLength(DomainError):
    pass


class BadD0(DomainError):
    pass


class NonIntegerProduct(FlagHilbertError, ArithmeticError):
    """A quantity that must be an integer came out fractional (internal bug)."""


class TailNonzero(FlagHilbertError, ArithmeticError):
    """The truncated series times (1-x)^(d+1) did not terminate at degree d."""


class PoleOrderMismatch(FlagHilbertError, ArithmeticError):
    pass
