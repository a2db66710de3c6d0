"""
Error hierarchy for CoinvKit

Every error carries the process exit code the CLI should use:
usage problems exit with 1, exhausted resource caps with 2 and
failed verifications with 3.
"""


class CoinvKitError(Exception):
    """Base class for all CoinvKit errors"""

    exit_code = 1


class UsageError(CoinvKitError):
    """Invalid input supplied by the caller"""


class InvalidColorError(UsageError):
    """A letter color is outside {0, ..., r-1}"""


class MalformedPartitionError(UsageError):
    """Blocks do not form an ordered set partition of [n]"""


class DomainError(UsageError):
    """A parameter is outside the range an operation is defined on"""


class ParseError(UsageError):
    """Text could not be parsed as a word, partition or monomial"""


class NotAMultichainError(UsageError):
    """An operation that needs a multichain monomial got something else"""


class NotApplicableError(UsageError):
    """A move or quotient was requested on a monomial it does not divide"""


class UnsupportedStatisticError(UsageError):
    """A statistic was requested outside the parameters it is defined for"""


class InvalidFaceError(UsageError):
    """A face triple violates the face invariants"""


class PatternMismatchError(UsageError):
    """A monomial matches none of the forbidden divisor patterns"""


class ResourceLimitError(CoinvKitError):
    """A configured cap (degree, slice size, symmetric bound) was exceeded"""

    exit_code = 2


class VerificationError(CoinvKitError):
    """An internal consistency check failed"""

    exit_code = 3


class CertificationError(VerificationError):
    """Independent computations of the same object disagree"""


class DecompositionError(VerificationError):
    """A class function did not decompose into a genuine character"""
