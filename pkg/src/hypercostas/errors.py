"""Exception types raised across the package."""


class SingularMatrixError(ValueError):
    """Matrix has determinant zero mod p."""


class NotPrimitiveError(ValueError):
    """Element is not a generator of the multiplicative group."""


class NotCostasError(ValueError):
    """Input was required to have the Costas property but does not."""


class DuplicateDotError(ValueError):
    pass


class ConstructionError(RuntimeError):
    """A construction produced an output that failed its own verification.

    This signals an arithmetic bug rather than a mathematical possibility.
    """


class CapExceededError(OverflowError):
    """An integer or field size is above the configured cap."""


class FormatError(ValueError):
    """A file could not be parsed. ``lineno`` is 1-based when known."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class ConfigurationError(RuntimeError):
    """Required resources (such as the fixture directory) are missing."""
