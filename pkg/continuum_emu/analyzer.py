"""
Post-run analysis of emulation traces.

summarize() derives TTC, phase totals, per-resource utilization and per-stage
spans from a RunResult's trace alone (no re-simulation). SweepAnalyzer works
on the long-format sweep table: strategy deltas per sweep value, crossover
detection between two strategies, and linear fits of TTC against the swept
parameter.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from .core.errors import AnalysisError
from .core.simtime import SimTime
from .engine.trace import RunResult, TaskRecord, makespan, phase_totals


@dataclass(frozen=True, slots=True)
class Summary:
    ttc: SimTime
    transfer: SimTime
    queue: SimTime
    dispatch: SimTime
    compute: SimTime
    utilization: dict[str, float] = field(default_factory=dict)
    stage_spans: dict[str, SimTime] = field(default_factory=dict)
    num_tasks: int = 0

    def to_dict(self) -> dict:
        return {
            "ttc_us": self.ttc.ticks,
            "phases_us": {
                "transfer": self.transfer.ticks,
                "queue": self.queue.ticks,
                "dispatch": self.dispatch.ticks,
                "compute": self.compute.ticks,
            },
            "utilization": dict(sorted(self.utilization.items())),
            "stage_spans_us": {k: v.ticks for k, v in sorted(self.stage_spans.items())},
            "num_tasks": self.num_tasks,
        }


def _stage_spans(records: list[TaskRecord]) -> dict[str, SimTime]:
    """Per stage: last completion minus first readiness among its tasks."""
    grouped: dict[str, list[TaskRecord]] = {}
    for rec in records:
        grouped.setdefault(rec.stage.value, []).append(rec)
    return {stage: makespan(recs) for stage, recs in grouped.items()}


def summarize(result: RunResult) -> Summary:
    """Compute every Summary field from the trace.

    Utilization counts the dispatch delay as busy core-time.
    """
    trace = result.trace
    records = trace.records
    if not records:
        raise AnalysisError("trace has no task records")
    for rec in records:
        rec.check()
        if rec.resource not in trace.resource_cores:
            raise AnalysisError(f"task {rec.task_id} ran on undeclared resource {rec.resource!r}")

    ttc = makespan(records)
    totals = phase_totals(records)

    busy: dict[str, int] = {rid: 0 for rid in trace.resource_cores}
    for rec in records:
        busy[rec.resource] += (rec.exec_end - rec.claimed_at).ticks
    utilization = {}
    for rid, cores in trace.resource_cores.items():
        value = busy[rid] / (cores * ttc.ticks) if ttc.ticks else 0.0
        if value > 1.0 + 1e-12:
            raise AnalysisError(f"resource {rid} is busier than its cores allow")
        utilization[rid] = min(value, 1.0)

    return Summary(
        ttc=ttc,
        transfer=totals["transfer"],
        queue=totals["queue"],
        dispatch=totals["dispatch"],
        compute=totals["compute"],
        utilization=utilization,
        stage_spans=_stage_spans(records),
        num_tasks=len(records),
    )


def relative_delta(a: Summary, b: Summary) -> float:
    """(ttc_a − ttc_b) / max(ttc_a, ttc_b), a signed fraction in [−1, 1].

    A positive value means `a` was slower than `b` by that fraction of `a`'s time.
    """
    ta, tb = a.ttc.ticks, b.ttc.ticks
    larger = max(ta, tb)
    if larger == 0:
        return 0.0
    return (ta - tb) / larger


def linear_fit(xs, ys) -> dict:
    """Least-squares line through (xs, ys) with its coefficient of determination."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.size < 2:
        raise AnalysisError("a linear fit needs at least two points")
    slope, intercept = np.polyfit(x, y, 1)
    residual = y - (slope * x + intercept)
    total = y - y.mean()
    ss_tot = float(np.dot(total, total))
    r_squared = 1.0 - float(np.dot(residual, residual)) / ss_tot if ss_tot > 0 else 1.0
    return {"slope": float(slope), "intercept": float(intercept), "r_squared": r_squared}


class SweepAnalyzer:
    """Analysis over a long-format sweep table (columns value, strategy, ttc_us, ...)."""

    def __init__(self, frame: pd.DataFrame):
        if "error" in frame:
            frame = frame[frame["error"].fillna("") == ""]
        if frame.empty:
            raise AnalysisError("sweep table has no successful rows")
        self.frame = frame

    def ttc_table(self) -> pd.DataFrame:
        """One row per sweep value, one column per strategy, in first-seen order."""
        table = self.frame.pivot_table(index="value", columns="strategy", values="ttc_us", aggfunc="first")
        return table.reindex(index=pd.unique(self.frame["value"]), columns=pd.unique(self.frame["strategy"]))

    def deltas(self, a: str, b: str) -> pd.Series:
        """relative_delta(a, b) per sweep value."""
        table = self.ttc_table()
        if a not in table or b not in table:
            raise AnalysisError(f"sweep has no strategy {a!r} or {b!r}")
        ta, tb = table[a].astype(float), table[b].astype(float)
        larger = np.maximum(ta, tb)
        return ((ta - tb) / larger.where(larger > 0, 1.0)).rename(f"{a}-{b}")

    def winners(self) -> pd.Series:
        """Strategy with the lowest TTC per sweep value (first listed wins ties)."""
        return self.ttc_table().astype(float).idxmin(axis=1)

    def sign_changes(self, a: str, b: str) -> int:
        signs = np.sign(self.deltas(a, b).to_numpy())
        signs = signs[signs != 0]
        return int(np.count_nonzero(signs[1:] != signs[:-1]))

    def find_crossover(self, a: str, b: str) -> tuple | None:
        """Consecutive sweep values between which the better of a and b flips, or None."""
        deltas = self.deltas(a, b)
        values = list(deltas.index)
        signs = np.sign(deltas.to_numpy())
        for i in range(1, len(values)):
            if signs[i - 1] != 0 and signs[i] != 0 and signs[i] != signs[i - 1]:
                return values[i - 1], values[i]
        return None

    def fit(self, strategy: str) -> dict:
        """Linear fit of TTC (µs) against the numeric sweep value for one strategy."""
        table = self.ttc_table()
        if strategy not in table:
            raise AnalysisError(f"sweep has no strategy {strategy!r}")
        column = table[strategy].astype(float)
        return linear_fit([float(v) for v in column.index], column.to_numpy())


__all__ = ["Summary", "SweepAnalyzer", "linear_fit", "relative_delta", "summarize"]
