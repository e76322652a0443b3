"""Exception hierarchy shared by every module."""


class XorsymError(Exception):
    """Base class for all library errors."""


class DimensionError(XorsymError, ValueError):
    """Operands live in spaces of different dimension."""


class ParseError(XorsymError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)


class ResourceError(XorsymError):
    """A configured size cap (arity, node budget) was exceeded."""


class InvariantError(XorsymError, AssertionError):
    """Internal tables are inconsistent; always a bug."""


class InconsistentOracleError(XorsymError):
    """A decision procedure contradicted the caller's existence assumption."""
