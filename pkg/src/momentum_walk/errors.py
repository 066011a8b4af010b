"""Exception types shared across the simulation layers."""


class WalkError(Exception):
    """Base class for all momentum-walk errors."""


class ConfigError(WalkError):
    """A run configuration failed schema or range validation."""


class DomainError(WalkError):
    """An argument fell outside the validated numerical domain."""


class TruncationError(WalkError):
    """Amplitude escaped the truncated momentum lattice.

    Carries the measured norm loss and, when raised inside a protocol
    loop, the step at which it happened.
    """

    def __init__(self, message, norm_loss=None, step=None):
        super().__init__(message)
        self.norm_loss = norm_loss
        self.step = step


class ResolutionError(WalkError):
    """Position-grid content exceeded what the grid can represent."""
