"""Exception types shared across the package."""


class RepdocError(Exception):
    """Base class for errors raised by this package."""


class EmptyInputError(RepdocError, ValueError):
    """An operation received an empty input where content is required."""


class ReservedSymbolError(RepdocError, ValueError):
    """A document or pattern contains the reserved terminator byte."""


class OutOfRangeError(RepdocError, IndexError):
    """An index or position argument is outside its valid range."""


class InvalidParamError(RepdocError, ValueError):
    """A build or query parameter violates its contract."""


class UnsupportedVariantError(RepdocError, RuntimeError):
    """The operation is not available for this index variant."""


class InvalidSpecError(RepdocError, ValueError):
    """A synthetic-collection spec is inconsistent."""


class FormatError(RepdocError, ValueError):
    """A serialized bundle is malformed or inconsistent."""


class MissingSectionError(RepdocError, KeyError):
    """A bundle does not contain the requested index section."""


class UnknownTaskError(RepdocError, ValueError):
    """The CLI was asked to run a task it does not know."""
