"""
Exception hierarchy shared by every module.

DataError and CapacityError split the failures the command line reports
with different exit codes.
"""


class LscError(Exception):
    """Base class for all list-source errors."""


class UsageError(LscError):
    """Bad command-line usage."""


class ConfigError(LscError):
    """Invalid environment configuration."""


class DataError(LscError):
    """Input data is malformed or inconsistent."""


class CapacityError(LscError):
    """An exhaustive computation exceeds its configured cap."""


class InvalidField(DataError):
    pass


class ZeroInverse(DataError):
    pass


class DimensionMismatch(DataError):
    pass


class SingularMatrix(DataError):
    pass


class RankDeficient(DataError):
    pass


class TooLong(DataError):
    pass


class DuplicatePoints(DataError):
    pass


class InvalidSource(DataError):
    pass


class EpsilonOutOfRange(DataError):
    pass


class KeyLengthMismatch(DataError):
    pass


class KeyReuse(DataError):
    pass


class CipherMismatch(DataError):
    """A bundle is decrypted with a cipher of another kind."""


class TooFewBlocks(DataError):
    pass


class ContainerFormatError(DataError):
    """Malformed container; `offset` is the first offending byte."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class TooLarge(CapacityError):
    pass


class ListTooLarge(CapacityError):
    pass


class TooManySubsets(CapacityError):
    pass
