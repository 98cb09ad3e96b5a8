class CompletionError(Exception):
    """Base class of every error raised by the completion library."""

    pass


class MixedRings(CompletionError):
    """Operands belong to different rings."""

    pass


class DivisionByZero(CompletionError, ZeroDivisionError):
    pass


class NotInvertible(CompletionError):
    """Element has no inverse in the active ring (e.g. t over Q[t])."""

    pass


class BothZero(CompletionError):
    pass


class FactorDegreeExceeded(CompletionError):
    """An irreducible factor is larger than the configured degree bound."""

    def __init__(self, degree: int, bound: int):
        self.degree = degree
        self.bound = bound
        super().__init__("irreducible factor of degree %d exceeds factor degree bound %d" % (degree, bound))


class LengthMismatch(CompletionError):
    pass


class SchemaMismatch(CompletionError):
    pass


class UnknownPreset(CompletionError):
    pass


class ZeroInput(CompletionError):
    pass


class MixedVariants(CompletionError):
    """Basis keys of different kinds were compared."""

    pass


class StrategyMismatch(CompletionError):
    pass


class UnknownGenerator(CompletionError):
    pass


class NonIntegerInput(CompletionError):
    pass


class BasisNotSpanning(CompletionError):
    """The configured additive basis does not contain a required element."""

    pass


class WordSyntaxError(CompletionError):
    """Input text does not follow the grammar; position is 1-based."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__("%s at position %d" % (message, position))


class ScalarNotInRing(CompletionError):
    """A value or literal lies outside the active ring; position is 1-based when known."""

    def __init__(self, message: str, position: int = None):
        self.position = position
        if position is not None:
            message = "%s at position %d" % (message, position)
        super().__init__(message)
