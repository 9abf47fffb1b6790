"""Exceptions shared across the package."""


class RrocError(Exception):
    """Base class for all errors raised by this package."""


class DataError(RrocError):
    """Invalid numeric input: wrong shape, non-finite values, empty data."""


class ConfigError(RrocError):
    """Invalid configuration: unknown options, missing columns, bad specs."""
