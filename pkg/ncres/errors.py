"""Exception hierarchy shared by the library and the CLI."""


class NcresError(ValueError):
    """Base class for every error raised by ncres."""


class CompositionError(NcresError):
    """Two paths whose endpoints do not match were composed."""


class DomainError(NcresError):
    """A value could not be evaluated in the requested scalar domain."""


class UndefinedPowerError(NcresError):
    """The least power of lambda is undefined (zero matrix)."""


class ParameterError(NcresError):
    """A builder or command received an invalid argument."""


class ShapeError(NcresError):
    """Dimension vectors or matrix shapes do not agree."""


class ModeError(NcresError):
    """Annihilator views of different modes were compared."""


class CapabilityError(NcresError):
    """The request is outside what this implementation decides."""


class InfeasibleError(NcresError):
    """A support admits no relation-valid representation."""


class SupportError(NcresError):
    """A representation does not live on the expected support."""


class PreconditionError(NcresError):
    """An operation's mathematical hypothesis does not hold."""


class InconsistencyError(NcresError):
    """An intertwiner system has no solution."""
