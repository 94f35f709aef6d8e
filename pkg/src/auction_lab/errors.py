"""Exception types shared across the package."""


class AuctionLabError(Exception):
    """Base class for all package errors."""


class ConfigError(AuctionLabError, ValueError):
    """Invalid parameter or configuration value."""


class InsufficientDataError(AuctionLabError, ValueError):
    """Series too short for the requested computation."""


class TickParseError(AuctionLabError, ValueError):
    """Malformed quote record; carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        if line_number:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class FitUndefinedError(AuctionLabError, ValueError):
    """Least-squares fit has no usable points."""


class SingularParameterError(AuctionLabError, ValueError):
    """Closed-form expression evaluated at a pole."""
