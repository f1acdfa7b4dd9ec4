"""Exception types shared across the package."""


class TopeError(Exception):
    """Base class for all package errors."""


class LengthMismatch(TopeError, ValueError):
    pass


class CodecError(TopeError, ValueError):
    pass


class CapExceeded(TopeError):
    """An enumeration would exceed its configured size cap."""


class InstanceFormatError(TopeError, ValueError):
    """A malformed instance or cycle file. Carries the offending line when known."""

    def __init__(self, reason, line=None):
        self.reason = reason
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + reason)


class ValidationFailure(TopeError):
    def __init__(self, report):
        self.report = report
        failed = ", ".join(name for name, ok in report.checks.items() if not ok)
        super().__init__(f"validation failed: {failed}")


class InternalInconsistency(TopeError):
    """Raised when an exact identity that must hold does not."""
