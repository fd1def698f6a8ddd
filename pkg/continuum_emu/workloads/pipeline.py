"""Multi-stage processing pipelines (pre-processing, analytics, inference, training).

Each stage splits its share of the raw compute evenly over `tasks_per_stage`
parallel tasks. Stages run one after another. Bytes flow through the pipeline:
the first stage reads raw_bytes × bytes_in_ratio, every later stage reads what
its predecessor wrote, and each stage writes raw_bytes × bytes_out_ratio.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..constants import STAGE_BYTES_OUT_RATIOS, STAGE_OPS_MULTIPLIERS
from ..core.errors import ConfigurationError
from ..core.model import DependencyMode, Stage, Task, Workload
from ..utils.stages import parse_stage, stage_annotations


@dataclass(frozen=True, slots=True)
class StageProfile:
    stage: Stage
    ops_multiplier: float
    bytes_in_ratio: float = 1.0
    bytes_out_ratio: float = 1.0
    annotations: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "stage", parse_stage(self.stage))
        if not math.isfinite(self.ops_multiplier) or self.ops_multiplier <= 0:
            raise ConfigurationError(f"stage {self.stage.value}: ops_multiplier must be positive")
        for name in ("bytes_in_ratio", "bytes_out_ratio"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ConfigurationError(f"stage {self.stage.value}: {name} must be >= 0")
        if not self.annotations:
            object.__setattr__(self, "annotations", stage_annotations(self.stage))

    @classmethod
    def default(cls, stage: Stage | str) -> StageProfile:
        stage = parse_stage(stage)
        return cls(
            stage=stage,
            ops_multiplier=STAGE_OPS_MULTIPLIERS[stage.value],
            bytes_in_ratio=1.0,
            bytes_out_ratio=STAGE_BYTES_OUT_RATIOS[stage.value],
        )

    @classmethod
    def from_dict(cls, data: dict | str) -> StageProfile:
        if isinstance(data, str):
            return cls.default(data)
        base = cls.default(data["stage"])
        return cls(
            stage=base.stage,
            ops_multiplier=float(data.get("ops_multiplier", base.ops_multiplier)),
            bytes_in_ratio=float(data.get("bytes_in_ratio", base.bytes_in_ratio)),
            bytes_out_ratio=float(data.get("bytes_out_ratio", base.bytes_out_ratio)),
        )


def _split(total: int, parts: int) -> list[int]:
    """Integer shares summing to total; the first shares take the remainder."""
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def pipeline_workload(
    stages: list[StageProfile],
    raw_ops: float,
    raw_bytes: int,
    tasks_per_stage: int,
    origin: str = "edge",
) -> Workload:
    """Staged workload: parallel tasks within a stage, stages in sequence.

    Every task originates at `origin` (where the raw data is sensed).
    """
    if not stages:
        raise ConfigurationError("a pipeline needs at least one stage")
    if not math.isfinite(raw_ops) or raw_ops <= 0:
        raise ConfigurationError(f"raw_ops must be positive, got {raw_ops!r}")
    if raw_bytes <= 0 or int(raw_bytes) != raw_bytes:
        raise ConfigurationError(f"raw_bytes must be a positive integer, got {raw_bytes!r}")
    if tasks_per_stage < 1 or int(tasks_per_stage) != tasks_per_stage:
        raise ConfigurationError(f"tasks_per_stage must be a positive integer, got {tasks_per_stage!r}")
    raw_bytes, tasks_per_stage = int(raw_bytes), int(tasks_per_stage)

    tasks = []
    stage_input = int(round(raw_bytes * stages[0].bytes_in_ratio))
    for s, profile in enumerate(stages):
        stage_output = int(round(raw_bytes * profile.bytes_out_ratio))
        ops = raw_ops * profile.ops_multiplier / tasks_per_stage
        inputs = _split(stage_input, tasks_per_stage)
        outputs = _split(stage_output, tasks_per_stage)
        for k in range(tasks_per_stage):
            task_id = s * tasks_per_stage + k
            tasks.append(Task(
                id=task_id,
                num_ops=ops,
                origin=origin,
                stage=profile.stage,
                input_bytes=inputs[k],
                output_bytes=outputs[k],
                sequence_index=task_id,
                stage_index=s,
            ))
        stage_input = stage_output

    return Workload(
        tasks=tuple(tasks),
        dependency_mode=DependencyMode.STAGED,
        name="pipeline-" + "-".join(p.stage.value for p in stages),
    )
