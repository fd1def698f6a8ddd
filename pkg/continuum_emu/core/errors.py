"""Exception hierarchy shared by every emulator module."""


class EmulatorError(Exception):
    """Base class for all emulator failures."""


class ConfigurationError(EmulatorError):
    """Invalid parameters for a distribution, resource, link, task or workload."""


class SchemaError(ConfigurationError):
    """Scenario document violates the published schema.

    Carries the dotted field path (and the line number for parse errors) so the
    CLI can print a precise diagnostic.
    """

    def __init__(self, message: str, field: str = "", line: int | None = None):
        self.field = field
        self.line = line
        location = field or "<document>"
        if line is not None:
            location = f"{location} (line {line})"
        super().__init__(f"{location}: {message}")


class ComputationError(EmulatorError):
    """Non-finite inputs, negative results or overflow in simulated-time arithmetic."""


class PlanError(EmulatorError):
    """A placement plan cannot be built or fails validation against the workload."""


class StrategyError(PlanError):
    """A plan or run failure attributed to one strategy of a comparison."""

    def __init__(self, label: str, cause: Exception):
        self.label = label
        self.cause = cause
        super().__init__(f"[{label}] {cause}")


class AnalysisError(EmulatorError):
    """A trace handed to the analyzer is incomplete or inconsistent."""
