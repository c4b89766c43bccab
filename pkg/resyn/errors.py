class ResynError(Exception):
    """
    The root of every error raised by the toolkit.
    """


class RegexSyntaxError(ResynError):
    """
    A superclass for problems found while reading a pattern string.
    """


class ParseError(RegexSyntaxError):
    """
    Raised when a pattern is malformed.

    :param position: the index in the pattern where parsing stopped
    :param reason: a short description of the problem
    """

    def __init__(self, position: int, reason: str):
        super().__init__(f"{reason} at position {position}")
        self.position = position
        self.reason = reason


class UnsupportedFeature(RegexSyntaxError):
    """
    Raised when a pattern is well formed but uses a construct outside
    the regular fragment we support (lookaround, backreferences, ...).

    :param feature: the name of the construct
    :param position: the index in the pattern where it was found
    """

    def __init__(self, feature: str, position: int):
        super().__init__(f"unsupported {feature} at position {position}")
        self.feature = feature
        self.position = position


class NonTerminationError(ResynError):
    """
    Raised when the rewrite system exceeds its rule-application budget.
    This always points at a bug in the rule set.
    """


class TokenExhaustion(ResynError):
    """
    Raised when an AST holds more distinct long literals than there are
    anonymization tokens.
    """


class InsufficientLanguage(ResynError):
    """
    Raised when a regex does not yield enough distinct strings to sample.
    """


class SamplingTimeout(ResynError):
    """
    Raised when example sampling runs past its wall-clock budget.
    """


class SegmentationFailure(ResynError):
    """
    Raised when a string cannot be split along the children of a Concat.
    """


class UnmatchedString(ResynError):
    """
    Raised when a string matches no branch of a Union.
    """


class BudgetExceeded(ResynError):
    """
    Raised when an exhaustive search runs out of budget.

    :param best_bound: the best upper bound known when the search stopped
    """

    def __init__(self, message: str, best_bound: int | None = None):
        super().__init__(message)
        self.best_bound = best_bound


class LemmaViolation(ResynError):
    """
    Raised when two exactly computed costs that must agree do not.
    """


class CorpusError(ResynError):
    """
    Raised when a corpus file cannot be read.

    :param path: the corpus path
    :param line: the 1-based line number of the offending record, if any
    """

    def __init__(self, path: str, reason: str, line: int | None = None):
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {reason}")
        self.path = path
        self.line = line


class ConfigError(ResynError):
    """
    Raised for unknown or malformed configuration keys.
    """
