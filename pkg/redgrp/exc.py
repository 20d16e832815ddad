"""redgrp exceptions"""


class RedgrpError(Exception):
    """Base exception for all redgrp related errors"""
    pass


class ConfigurationError(RedgrpError):
    """An invalid configuration value (environment or manifest)"""
    pass


class MalformedWordError(RedgrpError, ValueError):
    """A word uses letters outside of the oracle's rank"""
    pass


class OracleMismatchError(RedgrpError):
    """Two objects that must live over the same group do not"""
    pass


class UnsupportedOracleError(RedgrpError):
    """The requested operation is not available for this kind of group"""
    pass


class CapExceededError(RedgrpError):
    """A configurable size cap was exceeded"""

    def __init__(self, message, cap):
        super(CapExceededError, self).__init__(
            "{} (cap {})".format(message, cap))
        self.cap = cap


class BallOverflowError(CapExceededError):
    """A ball enumeration grew past the ball cap"""
    pass


class SupportOverflowError(CapExceededError):
    """An algebra element grew past the support cap"""
    pass


class NonConvergenceError(RedgrpError):
    """An iteration ran out of steps before meeting its condition"""

    def __init__(self, message, last=None, iterations=None):
        super(NonConvergenceError, self).__init__(message)
        self.last = last
        self.iterations = iterations


class SmallCancellationError(RedgrpError):
    """A relator violates the C'(1/6) condition"""

    def __init__(self, piece, relator_length):
        super(SmallCancellationError, self).__init__(
            "piece of length {} is not shorter than {}/6".format(
                len(piece), relator_length))
        self.piece = piece
        self.relator_length = relator_length


class CocycleError(RedgrpError):
    """A cocycle value left the set on which the kernel mean is certified"""

    def __init__(self, message, s, p, alpha):
        super(CocycleError, self).__init__(message)
        self.s = s
        self.p = p
        self.alpha = alpha


class InvalidMeanError(RedgrpError):
    """A mean produced something that is not a probability measure on E"""
    pass


class InconclusiveError(RedgrpError):
    """An experiment could not decide within the data it was given"""
    pass


class ParseError(RedgrpError, ValueError):
    """Text input could not be parsed"""

    def __init__(self, message, line=None, column=None):
        where = []
        if line is not None:
            where.append("line {}".format(line))
        if column is not None:
            where.append("column {}".format(column))
        if where:
            message = "{} ({})".format(message, ", ".join(where))
        super(ParseError, self).__init__(message)
        self.line = line
        self.column = column


class ManifestError(ParseError):
    """An experiment manifest is invalid"""
    pass


class WordProblemError(RedgrpError):
    """A word could not be matched to a normal form"""

    def __init__(self, message, word):
        super(WordProblemError, self).__init__(message)
        self.word = word
