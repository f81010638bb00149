"""Exception hierarchy shared by the whole package.

Two error families matter operationally: configuration/data problems the
caller can fix (bad columns, inconsistent shapes, invalid options) and
numerical failures inside the decomposition itself. The CLI maps them to
exit codes 2 and 1 respectively; the service maps them to HTTP 400/422
and 500.
"""


class DmdkitError(Exception):
    """Base class for all package errors."""


class DataError(DmdkitError):
    """Invalid or inconsistent input data (parsing, shapes, sampling)."""


class ConfigError(DmdkitError):
    """Invalid run configuration or option combination."""


class NumericalError(DmdkitError):
    """A numerical operation failed or produced an unusable result."""


class DmdkitWarning(UserWarning):
    """Category for advisory warnings (ill conditioning, degenerate fits)."""
