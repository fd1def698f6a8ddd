"""Placement strategies mapping workloads onto resources.

Deployment modalities:
    edge_centric      every task on the edge tier
    cloud_centric     every task on the cloud tier
    hybrid_threshold  per task, compare input_bytes or num_ops to a threshold
                      (ties go below)
    hybrid_stage      per task, look up its stage in a stage -> tier map
    explicit          a full task -> resource assignment, validated

Within a tier holding several resources, tasks are spread round-robin in
submission order. The fog tier is accepted everywhere a tier is, but no
strategy targets it implicitly.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable

import pandas as pd

from .core.errors import ConfigurationError, EmulatorError, PlanError, StrategyError
from .core.model import Link, Resource, Stage, Tier, Workload, resource_index
from .utils.stages import is_edge_affine

logger = logging.getLogger(__name__)


class StrategyKind(str, Enum):
    EDGE_CENTRIC = "edge_centric"
    CLOUD_CENTRIC = "cloud_centric"
    HYBRID_THRESHOLD = "hybrid_threshold"
    HYBRID_STAGE = "hybrid_stage"
    EXPLICIT = "explicit"


class ThresholdMetric(str, Enum):
    INPUT_BYTES = "input_bytes"
    NUM_OPS = "num_ops"


@dataclass(frozen=True, slots=True)
class PlacementPlan:
    """Explicit task id -> resource id assignment produced by a strategy."""

    assignment: dict[int, str]
    label: str

    def counts(self) -> dict[str, int]:
        result: dict[str, int] = {}
        for resource_id in self.assignment.values():
            result[resource_id] = result.get(resource_id, 0) + 1
        return result


def default_stage_map() -> dict[Stage, Tier]:
    """Edge-affine stages on the edge, everything else in the cloud."""
    return {s: Tier.EDGE if is_edge_affine(s) else Tier.CLOUD for s in Stage}


@dataclass(frozen=True, slots=True)
class StrategySpec:
    """A deployment modality with its kind-specific parameters."""

    kind: StrategyKind
    label: str = ""
    metric: ThresholdMetric = ThresholdMetric.INPUT_BYTES
    threshold: float = 0.0
    below: Tier = Tier.EDGE
    above: Tier = Tier.CLOUD
    stage_map: dict[Stage, Tier] = field(default_factory=dict)
    assignment: dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", StrategyKind(self.kind))
            object.__setattr__(self, "metric", ThresholdMetric(self.metric))
            object.__setattr__(self, "below", Tier(self.below))
            object.__setattr__(self, "above", Tier(self.above))
            object.__setattr__(
                self, "stage_map", {Stage(s): Tier(t) for s, t in self.stage_map.items()}
            )
        except ValueError as e:
            raise ConfigurationError(f"strategy {self.label or self.kind}: {e}") from e
        object.__setattr__(self, "assignment", {int(k): str(v) for k, v in self.assignment.items()})
        if not math.isfinite(float(self.threshold)):
            raise ConfigurationError("threshold must be finite")
        if self.kind is StrategyKind.HYBRID_STAGE and not self.stage_map:
            object.__setattr__(self, "stage_map", default_stage_map())
        if not self.label:
            object.__setattr__(self, "label", self.kind.value)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> StrategySpec:
        return cls(
            kind=data["kind"],
            label=data.get("label", ""),
            metric=data.get("metric", ThresholdMetric.INPUT_BYTES.value),
            threshold=data.get("threshold", 0.0),
            below=data.get("below", Tier.EDGE.value),
            above=data.get("above", Tier.CLOUD.value),
            stage_map=data.get("stages", {}),
            assignment=data.get("assignment", {}),
        )

    def referenced_tiers(self) -> set[Tier]:
        if self.kind is StrategyKind.EDGE_CENTRIC:
            return {Tier.EDGE}
        if self.kind is StrategyKind.CLOUD_CENTRIC:
            return {Tier.CLOUD}
        if self.kind is StrategyKind.HYBRID_THRESHOLD:
            return {self.below, self.above}
        if self.kind is StrategyKind.HYBRID_STAGE:
            return set(self.stage_map.values())
        return set()


def _tiers(resources: Iterable[Resource]) -> dict[Tier, list[Resource]]:
    tiers: dict[Tier, list[Resource]] = {}
    for r in resources:
        tiers.setdefault(r.tier, []).append(r)
    return tiers


def _tier_for_task(spec: StrategySpec, task) -> Tier:
    if spec.kind is StrategyKind.EDGE_CENTRIC:
        return Tier.EDGE
    if spec.kind is StrategyKind.CLOUD_CENTRIC:
        return Tier.CLOUD
    if spec.kind is StrategyKind.HYBRID_THRESHOLD:
        value = task.input_bytes if spec.metric is ThresholdMetric.INPUT_BYTES else task.num_ops
        return spec.below if value <= spec.threshold else spec.above
    if task.stage not in spec.stage_map:
        raise PlanError(f"strategy {spec.label}: stage {task.stage.value!r} is not mapped to a tier")
    return spec.stage_map[task.stage]


def make_plan(workload: Workload, resources: Iterable[Resource], spec: StrategySpec) -> PlacementPlan:
    """Assign every task of `workload` to a resource according to `spec`."""
    resources = list(resources)
    by_id = resource_index(resources)

    if spec.kind is StrategyKind.EXPLICIT:
        task_ids = {t.id for t in workload.tasks}
        missing = sorted(task_ids - spec.assignment.keys())
        if missing:
            raise PlanError(f"strategy {spec.label}: tasks {missing} have no assignment")
        extra = sorted(spec.assignment.keys() - task_ids)
        if extra:
            raise PlanError(f"strategy {spec.label}: assignment names unknown tasks {extra}")
        unknown = sorted({r for r in spec.assignment.values() if r not in by_id})
        if unknown:
            raise PlanError(f"strategy {spec.label}: assignment names unknown resources {unknown}")
        return PlacementPlan(assignment=dict(spec.assignment), label=spec.label)

    tiers = _tiers(resources)
    for tier in sorted(spec.referenced_tiers(), key=lambda t: t.value):
        if not tiers.get(tier):
            raise PlanError(f"strategy {spec.label}: no resources in tier {tier.value!r}")

    next_slot: dict[Tier, int] = {}
    assignment: dict[int, str] = {}
    for task in workload.ordered():
        tier = _tier_for_task(spec, task)
        members = tiers.get(tier)
        if not members:
            raise PlanError(f"strategy {spec.label}: no resources in tier {tier.value!r}")
        slot = next_slot.get(tier, 0)
        assignment[task.id] = members[slot % len(members)].id
        next_slot[tier] = slot + 1

    logger.debug("plan %s: %s", spec.label, PlacementPlan(assignment, spec.label).counts())
    return PlacementPlan(assignment=assignment, label=spec.label)


def unique_labels(specs: list[StrategySpec]) -> list[str]:
    """Strategy labels, suffixed with #n when a label repeats."""
    seen: dict[str, int] = {}
    labels = []
    for spec in specs:
        count = seen.get(spec.label, 0) + 1
        seen[spec.label] = count
        labels.append(spec.label if count == 1 else f"{spec.label}#{count}")
    return labels


@dataclass(slots=True)
class ComparisonRow:
    label: str
    spec: StrategySpec
    result: Any
    summary: Any
    delta_vs_best: float = 0.0


@dataclass(slots=True)
class Comparison:
    """Per-strategy results of one seed, in the order the strategies were listed."""

    rows: list[ComparisonRow]
    seed: int

    @property
    def best(self) -> ComparisonRow:
        return min(self.rows, key=lambda row: row.summary.ttc)

    def row(self, label: str) -> ComparisonRow:
        for row in self.rows:
            if row.label == label:
                return row
        raise KeyError(label)

    def to_frame(self) -> pd.DataFrame:
        records = []
        for row in self.rows:
            s = row.summary
            records.append({
                "strategy": row.label,
                "ttc_s": s.ttc.seconds,
                "transfer_s": s.transfer.seconds,
                "queue_s": s.queue.seconds,
                "dispatch_s": s.dispatch.seconds,
                "compute_s": s.compute.seconds,
                "delta_vs_best": row.delta_vs_best,
            })
        return pd.DataFrame.from_records(records)


def compare_strategies(
    workload: Workload,
    resources: Iterable[Resource],
    links: Iterable[Link],
    specs: list[StrategySpec],
    seed: int,
    return_outputs: bool = False,
) -> Comparison:
    """Run the engine once per strategy with the same seed and compare TTCs.

    Each row carries the RunResult, its Summary and the relative delta versus
    the fastest strategy (0 for the winner, positive for slower ones).
    """
    from .analyzer import relative_delta, summarize
    from .engine import run

    resources = list(resources)
    links = list(links)
    rows: list[ComparisonRow] = []
    for label, spec in zip(unique_labels(specs), specs):
        try:
            plan = make_plan(workload, resources, spec)
            result = run(workload, resources, links, plan, seed, return_outputs=return_outputs)
        except EmulatorError as e:
            raise StrategyError(label, e) from e
        summary = summarize(result)
        logger.info("strategy %s: ttc=%s", label, summary.ttc)
        rows.append(ComparisonRow(label=label, spec=spec, result=result, summary=summary))

    if not rows:
        raise PlanError("at least one strategy is required")
    best = min(rows, key=lambda row: row.summary.ttc)
    for row in rows:
        row.delta_vs_best = relative_delta(row.summary, best.summary)
    return Comparison(rows=rows, seed=seed)
