"""Exception hierarchy shared by the engine and the command line."""


class FlagQHError(Exception):
    """Base class; ``exit_code`` is what the command line returns."""

    exit_code = 1


class ConfigurationError(FlagQHError):
    """Invalid root system, parabolic subset or ordering."""

    exit_code = 2


class UsageError(FlagQHError):
    """Arguments violate an operation's preconditions."""

    exit_code = 2


class DomainError(FlagQHError):
    """Input is not in the mathematical domain (e.g. a non-root)."""

    exit_code = 2


class ResourceError(FlagQHError):
    """A configured size cap would be exceeded."""

    exit_code = 3


class ConsistencyError(FlagQHError):
    """An internal invariant that a theorem guarantees failed to hold."""

    exit_code = 1
