"""Domain types, distributions, RNG streams and simulated time."""
from .distributions import Distribution, DistributionKind, sample
from .errors import (
    AnalysisError,
    ComputationError,
    ConfigurationError,
    EmulatorError,
    PlanError,
    SchemaError,
    StrategyError,
)
from .model import (
    DependencyMode,
    Link,
    LinkConcurrency,
    OpsMode,
    OpsVariability,
    Resource,
    Stage,
    Task,
    Tier,
    Workload,
    link_index,
    resource_index,
)
from .rng import RngStream, StreamRegistry
from .simtime import ZERO, SimTime, duration_for

__all__ = [
    "AnalysisError",
    "ComputationError",
    "ConfigurationError",
    "DependencyMode",
    "Distribution",
    "DistributionKind",
    "EmulatorError",
    "Link",
    "LinkConcurrency",
    "OpsMode",
    "OpsVariability",
    "PlanError",
    "Resource",
    "RngStream",
    "SchemaError",
    "SimTime",
    "Stage",
    "StrategyError",
    "StreamRegistry",
    "Task",
    "Tier",
    "Workload",
    "ZERO",
    "duration_for",
    "link_index",
    "resource_index",
    "sample",
]
