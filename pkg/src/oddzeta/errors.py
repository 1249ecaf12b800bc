"""Exception hierarchy shared by every oddzeta module."""


class OddZetaError(Exception):
    """Base class for all oddzeta errors."""


class ConfigurationError(OddZetaError, ValueError):
    """Invalid precision, family, order or settings value."""


class PreconditionError(OddZetaError, ValueError):
    """Arguments outside the region where an identity or evaluator is valid."""


class PoleError(PreconditionError):
    """Evaluation requested at a pole."""


class PrecisionShortfallError(OddZetaError, ArithmeticError):
    """A series or the oracle could not reach the requested digits."""


class CacheFormatError(OddZetaError, ValueError):
    """Bernoulli cache file could not be parsed."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CacheVersionError(CacheFormatError):
    """Bernoulli cache file was written by an incompatible version."""


class CacheIntegrityError(OddZetaError, ValueError):
    """Bernoulli cache entries violate the defining recurrence."""
