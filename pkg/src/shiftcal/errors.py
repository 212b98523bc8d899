"""Exception types shared across the package."""


class ShiftCalError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(ShiftCalError):
    """Invalid or inconsistent configuration values."""


class InvalidParams(ShiftCalError):
    """Control parameters outside their physical sanity range."""


class NonFiniteState(ShiftCalError):
    """Simulation state became NaN/inf (unstable config or step size)."""


class EngagementTimeout(ShiftCalError):
    """Gear engagement never happened within the simulation horizon."""


class DegenerateSpeed(ShiftCalError):
    """Engine speed at/below the floor where the speed ratio is meaningless."""


class NotCompleted(ShiftCalError):
    """Duration index requested for a maneuver that never synchronized."""


class InvalidCutoff(ShiftCalError):
    """High-pass cutoff incompatible with the sampling rate."""


class WindowTooShort(ShiftCalError):
    """Telemetry does not cover the smoothness evaluation window."""


class FailedBaseline(ShiftCalError):
    """Reference-run statistics unusable (incomplete runs or zero spread)."""


class SingularKernel(ShiftCalError):
    """Kernel matrix not positive definite even after jitter escalation."""


class NoModel(ShiftCalError):
    """Surrogate models requested before they were fitted."""


class MissingSnapshot(ShiftCalError):
    """Campaign log lacks the surrogate snapshot needed for analysis."""


class InvalidPDF(ShiftCalError):
    """Gaussian density with non-positive standard deviation."""
