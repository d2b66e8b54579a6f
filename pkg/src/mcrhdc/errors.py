class MCRError(Exception):
    """Root of every error raised by mcrhdc."""


class InvalidArgumentError(MCRError, ValueError):
    """An argument is outside the domain of the operation."""


class InvalidStateError(MCRError, RuntimeError):
    """The object is not in a state that allows the operation (e.g. empty accumulator)."""


class UnsupportedError(MCRError, NotImplementedError):
    """The requested arithmetic path does not support the configuration."""


class DatasetError(MCRError, OSError):
    """A dataset file or manifest is missing or unreadable."""
