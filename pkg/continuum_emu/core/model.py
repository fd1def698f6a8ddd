"""Domain types: tasks, workloads, resources and network links.

All types are frozen dataclasses validated on construction; they are shared
read-only between runs. The only mutable objects of an emulation (RNG streams,
core and link occupancy) live in the engine.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ..constants import DEFAULT_OPS_FLOOR, DEFAULT_THROUGHPUT_FLOOR_FRACTION
from .distributions import Distribution
from .errors import ConfigurationError
from .rng import RngStream
from .simtime import ZERO, SimTime


class Stage(str, Enum):
    """Processing stage of a task (the rows of the stage-characteristics table)."""
    PRE_PROCESSING = "pre_processing"
    ANALYTICS = "analytics"
    INFERENCE = "inference"
    TRAINING = "training"
    GENERIC = "generic"


class Tier(str, Enum):
    """Layer of the edge-to-cloud continuum a resource belongs to."""
    EDGE = "edge"
    FOG = "fog"
    CLOUD = "cloud"


class OpsMode(str, Enum):
    """How a workload's ops distribution combines with each task's num_ops.

    ABSOLUTE: the sample replaces num_ops
    MULTIPLIER: the sample scales num_ops
    """
    ABSOLUTE = "absolute"
    MULTIPLIER = "multiplier"


class DependencyMode(str, Enum):
    """Implicit ordering between the tasks of a workload.

    INDEPENDENT: every task is ready at t=0 (unless it lists depends_on)
    SEQUENTIAL: task i+1 waits for task i (iterative algorithms)
    STAGED: every task of stage index s waits for all tasks of the previous stage index
    """
    INDEPENDENT = "independent"
    SEQUENTIAL = "sequential"
    STAGED = "staged"


class LinkConcurrency(str, Enum):
    SERIAL = "serial"
    UNLIMITED = "unlimited"


def _positive(name: str, value: float) -> float:
    number = float(value)
    if not math.isfinite(number) or number <= 0:
        raise ConfigurationError(f"{name} must be a positive finite number, got {value!r}")
    return number


def _non_negative_int(name: str, value: int) -> int:
    if isinstance(value, bool) or int(value) != value or value < 0:
        raise ConfigurationError(f"{name} must be a non-negative integer, got {value!r}")
    return int(value)


@dataclass(frozen=True, slots=True)
class Task:
    """One unit of computation sized in abstract operations."""

    id: int
    num_ops: float
    origin: str
    stage: Stage = Stage.GENERIC
    input_bytes: int = 0
    output_bytes: int = 0
    sequence_index: int = 0
    stage_index: int = 0
    depends_on: tuple[int, ...] = ()

    def __post_init__(self):
        _non_negative_int("task id", self.id)
        object.__setattr__(self, "num_ops", _positive(f"task {self.id} num_ops", self.num_ops))
        try:
            object.__setattr__(self, "stage", Stage(self.stage))
        except ValueError as e:
            raise ConfigurationError(f"task {self.id}: unknown stage {self.stage!r}") from e
        object.__setattr__(self, "input_bytes", _non_negative_int("input_bytes", self.input_bytes))
        object.__setattr__(self, "output_bytes", _non_negative_int("output_bytes", self.output_bytes))
        _non_negative_int("sequence_index", self.sequence_index)
        _non_negative_int("stage_index", self.stage_index)
        object.__setattr__(self, "depends_on", tuple(int(d) for d in self.depends_on))
        if not self.origin:
            raise ConfigurationError(f"task {self.id}: origin resource id is required")


@dataclass(frozen=True, slots=True)
class OpsVariability:
    """Workload-level ops distribution with its combination mode and floor."""

    dist: Distribution
    mode: OpsMode = OpsMode.MULTIPLIER
    floor: float = DEFAULT_OPS_FLOOR

    def __post_init__(self):
        object.__setattr__(self, "mode", OpsMode(self.mode))
        object.__setattr__(self, "floor", _positive("ops floor", self.floor))


@dataclass(frozen=True, slots=True)
class Workload:
    """Ordered collection of tasks submitted together."""

    tasks: tuple[Task, ...]
    dependency_mode: DependencyMode = DependencyMode.INDEPENDENT
    ops_variability: OpsVariability | None = None
    name: str = "workload"

    def __post_init__(self):
        tasks = tuple(self.tasks)
        if not tasks:
            raise ConfigurationError("a workload needs at least one task")
        ids = [t.id for t in tasks]
        if len(set(ids)) != len(ids):
            raise ConfigurationError("task ids must be unique within a workload")
        object.__setattr__(self, "tasks", tasks)
        object.__setattr__(self, "dependency_mode", DependencyMode(self.dependency_mode))

    def __len__(self) -> int:
        return len(self.tasks)

    def ordered(self) -> list[Task]:
        """Tasks in submission order (sequence_index, then id)."""
        return sorted(self.tasks, key=lambda t: (t.sequence_index, t.id))

    def predecessors(self) -> dict[int, set[int]]:
        """Dependency sets per task id, combining the mode with explicit depends_on."""
        ordered = self.ordered()
        preds: dict[int, set[int]] = {t.id: set(t.depends_on) for t in ordered}
        if self.dependency_mode is DependencyMode.SEQUENTIAL:
            for prev, cur in zip(ordered, ordered[1:]):
                preds[cur.id].add(prev.id)
        elif self.dependency_mode is DependencyMode.STAGED:
            by_stage: dict[int, list[int]] = {}
            for t in ordered:
                by_stage.setdefault(t.stage_index, []).append(t.id)
            stage_indices = sorted(by_stage)
            for lower, upper in zip(stage_indices, stage_indices[1:]):
                for tid in by_stage[upper]:
                    preds[tid].update(by_stage[lower])
        return preds

    def sampled_ops(self, rng: RngStream) -> dict[int, float]:
        """Effective ops per task, drawn once per task in submission order."""
        result = {}
        var = self.ops_variability
        for t in self.ordered():
            if var is None:
                result[t.id] = t.num_ops
                continue
            drawn = var.dist.sample(rng)
            ops = drawn if var.mode is OpsMode.ABSOLUTE else t.num_ops * drawn
            result[t.id] = max(ops, var.floor) if math.isfinite(ops) else var.floor
        return result


@dataclass(frozen=True, slots=True)
class Resource:
    """An execution site: cores, per-core throughput, variability and dispatch delay."""

    id: str
    tier: Tier
    num_cores: int
    ops_per_sec: float
    perf_dist: Distribution | None = None
    dispatch_delay: SimTime = ZERO
    throughput_floor_fraction: float = DEFAULT_THROUGHPUT_FLOOR_FRACTION

    def __post_init__(self):
        if not self.id:
            raise ConfigurationError("resource id is required")
        try:
            object.__setattr__(self, "tier", Tier(self.tier))
        except ValueError as e:
            raise ConfigurationError(f"resource {self.id}: unknown tier {self.tier!r}") from e
        if isinstance(self.num_cores, bool) or int(self.num_cores) != self.num_cores or self.num_cores < 1:
            raise ConfigurationError(f"resource {self.id}: num_cores must be >= 1, got {self.num_cores!r}")
        object.__setattr__(self, "num_cores", int(self.num_cores))
        object.__setattr__(self, "ops_per_sec", _positive(f"resource {self.id} ops_per_sec", self.ops_per_sec))
        _positive("throughput floor fraction", self.throughput_floor_fraction)
        if not isinstance(self.dispatch_delay, SimTime):
            raise ConfigurationError(f"resource {self.id}: dispatch_delay must be a SimTime")

    @property
    def throughput_floor(self) -> float:
        return self.throughput_floor_fraction * self.ops_per_sec

    def sample_throughput(self, rng: RngStream) -> float:
        """Effective per-core throughput for one task execution."""
        if self.perf_dist is None:
            return self.ops_per_sec
        value = self.ops_per_sec * self.perf_dist.sample(rng)
        if not math.isfinite(value):
            return self.throughput_floor
        return max(value, self.throughput_floor)


@dataclass(frozen=True, slots=True)
class Link:
    """Directed network path between two resources."""

    src: str
    dst: str
    bandwidth_bytes_per_sec: float
    setup_overhead: SimTime = ZERO
    latency: SimTime = ZERO
    concurrency: LinkConcurrency = LinkConcurrency.SERIAL

    def __post_init__(self):
        if not self.src or not self.dst:
            raise ConfigurationError("link src and dst are required")
        object.__setattr__(
            self, "bandwidth_bytes_per_sec",
            _positive(f"link {self.src}->{self.dst} bandwidth", self.bandwidth_bytes_per_sec),
        )
        object.__setattr__(self, "concurrency", LinkConcurrency(self.concurrency))
        for name in ("setup_overhead", "latency"):
            if not isinstance(getattr(self, name), SimTime):
                raise ConfigurationError(f"link {self.src}->{self.dst}: {name} must be a SimTime")

    @property
    def key(self) -> tuple[str, str]:
        return (self.src, self.dst)


def link_index(links) -> dict[tuple[str, str], Link]:
    """Map (src, dst) to Link, rejecting duplicate pairs."""
    index: dict[tuple[str, str], Link] = {}
    for link in links:
        if link.key in index:
            raise ConfigurationError(f"duplicate link {link.src}->{link.dst}")
        index[link.key] = link
    return index


def resource_index(resources) -> dict[str, Resource]:
    index: dict[str, Resource] = {}
    for r in resources:
        if r.id in index:
            raise ConfigurationError(f"duplicate resource id {r.id!r}")
        index[r.id] = r
    return index


__all__ = [
    "DependencyMode",
    "Link",
    "LinkConcurrency",
    "OpsMode",
    "OpsVariability",
    "Resource",
    "Stage",
    "Task",
    "Tier",
    "Workload",
    "link_index",
    "resource_index",
]
