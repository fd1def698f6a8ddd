"""Bag-of-tasks ensembles, homogeneous or heterogeneous through an ops distribution."""
from __future__ import annotations

from ..core.distributions import Distribution
from ..core.errors import ConfigurationError
from ..core.model import DependencyMode, OpsMode, OpsVariability, Stage, Task, Workload


def ensemble_workload(
    n_tasks: int,
    num_ops: float,
    origin: str,
    ops_dist: Distribution | None = None,
    mode: OpsMode = OpsMode.MULTIPLIER,
    stage: Stage = Stage.GENERIC,
    input_bytes: int = 0,
    output_bytes: int = 0,
) -> Workload:
    """`n_tasks` independent tasks of nominal size `num_ops`."""
    if isinstance(n_tasks, bool) or int(n_tasks) != n_tasks or n_tasks < 1:
        raise ConfigurationError(f"n_tasks must be a positive integer, got {n_tasks!r}")
    tasks = tuple(
        Task(
            id=i,
            num_ops=num_ops,
            origin=origin,
            stage=stage,
            input_bytes=input_bytes,
            output_bytes=output_bytes,
            sequence_index=i,
        )
        for i in range(int(n_tasks))
    )
    return Workload(
        tasks=tasks,
        dependency_mode=DependencyMode.INDEPENDENT,
        ops_variability=OpsVariability(ops_dist, mode) if ops_dist is not None else None,
        name=f"ensemble-{int(n_tasks)}",
    )
