"""K-Means cost model.

A K-Means run of T iterations over N points with K clusters costs O(K·N·T).
Each iteration becomes one task of c·K·N operations, where the calibration
constant c folds in data dimensionality and per-distance cost. Iterations are
inherently serial, so the workload is sequential. The dataset moves once: only
the first iteration carries N·bytes_per_point input bytes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..core.distributions import Distribution
from ..core.errors import ConfigurationError
from ..core.model import DependencyMode, OpsMode, OpsVariability, Stage, Task, Workload


@dataclass(frozen=True, slots=True)
class KMeansSpec:
    n_points: int
    n_clusters: int
    n_iterations: int
    ops_per_point_cluster: float = 1.0
    bytes_per_point: float = 16.0
    variability: Distribution | None = None
    origin: str = "edge"

    def __post_init__(self):
        for name in ("n_points", "n_clusters", "n_iterations"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise ConfigurationError(f"k-means {name} must be a positive integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        for name in ("ops_per_point_cluster", "bytes_per_point"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value <= 0:
                raise ConfigurationError(f"k-means {name} must be positive, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_dict(cls, data: dict) -> KMeansSpec:
        variability = data.get("variability")
        return cls(
            n_points=data["n_points"],
            n_clusters=data["n_clusters"],
            n_iterations=data["n_iterations"],
            ops_per_point_cluster=data.get("ops_per_point_cluster", 1.0),
            bytes_per_point=data.get("bytes_per_point", 16.0),
            variability=Distribution.from_dict(variability) if variability else None,
            origin=data.get("origin", "edge"),
        )

    @property
    def ops_per_iteration(self) -> float:
        return self.ops_per_point_cluster * self.n_clusters * self.n_points

    @property
    def total_ops(self) -> float:
        return self.ops_per_iteration * self.n_iterations

    @property
    def dataset_bytes(self) -> int:
        return int(round(self.n_points * self.bytes_per_point))


def kmeans_workload(spec: KMeansSpec) -> Workload:
    """Sequential workload of one task per iteration."""
    tasks = tuple(
        Task(
            id=i,
            num_ops=spec.ops_per_iteration,
            origin=spec.origin,
            stage=Stage.TRAINING,
            input_bytes=spec.dataset_bytes if i == 0 else 0,
            sequence_index=i,
        )
        for i in range(spec.n_iterations)
    )
    variability = OpsVariability(spec.variability, OpsMode.MULTIPLIER) if spec.variability else None
    return Workload(
        tasks=tasks,
        dependency_mode=DependencyMode.SEQUENTIAL,
        ops_variability=variability,
        name=f"kmeans-K{spec.n_clusters}-N{spec.n_points}-T{spec.n_iterations}",
    )


def calibrate_throughput(measured_runtime_sec: float, spec: KMeansSpec) -> float:
    """Per-core ops/sec that makes the emulated compute time equal a measured runtime.

    Returns (c·K·N·T) / measured_runtime.
    """
    runtime = float(measured_runtime_sec)
    if not math.isfinite(runtime) or runtime <= 0:
        raise ConfigurationError(f"measured runtime must be positive, got {measured_runtime_sec!r}")
    return spec.total_ops / runtime
