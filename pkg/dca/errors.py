class DCAError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionError(DCAError, ValueError):
    pass


class DomainError(DCAError, ValueError):
    """Empty effective domain, point outside a box, or an invalid parameter."""


class PreconditionError(DCAError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInHullError(DCAError):
    def __init__(self, message, separator=None):
        super().__init__(message)
        self.separator = separator


class InconsistentChainError(DCAError, AssertionError):
    """A stronger class accepted a function that a weaker class rejected."""


class UnknownNameError(DCAError, ValueError):
    pass


class InstanceFormatError(DCAError, ValueError):
    def __init__(self, location, message):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message
