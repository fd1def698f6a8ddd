"""Execution trace and run result of one emulation."""
from __future__ import annotations

from dataclasses import dataclass, field

import pandas as pd

from ..core.errors import AnalysisError
from ..core.model import Stage
from ..core.simtime import ZERO, SimTime, duration_for

TRACE_COLUMNS = [
    "task_id",
    "resource",
    "ready_us",
    "xfer_start_us",
    "xfer_end_us",
    "exec_start_us",
    "exec_end_us",
    "ops",
    "throughput",
    "stage",
    "core",
    "queue_enter_us",
    "dispatch_us",
    "return_start_us",
    "return_end_us",
]


@dataclass(slots=True)
class TaskRecord:
    """Timestamps and samples of one task. Transfer fields are None for local tasks."""

    task_id: int
    resource: str
    stage: Stage
    ready: SimTime
    queue_enter: SimTime | None = None
    xfer_start: SimTime | None = None
    xfer_end: SimTime | None = None
    exec_start: SimTime | None = None
    exec_end: SimTime | None = None
    dispatch: SimTime = ZERO
    sampled_ops: float = 0.0
    sampled_throughput: float = 0.0
    core: int = -1
    return_start: SimTime | None = None
    return_end: SimTime | None = None

    @property
    def transferred(self) -> bool:
        return self.xfer_start is not None

    @property
    def completion(self) -> SimTime:
        """When the task's effects are done: output returned if it was sent back, else exec end."""
        return self.return_end if self.return_end is not None else self.exec_end

    @property
    def transfer_time(self) -> SimTime:
        inbound = self.xfer_end - self.xfer_start if self.transferred else ZERO
        outbound = self.return_end - self.return_start if self.return_end is not None else ZERO
        return inbound + outbound

    @property
    def inbound_transfer_time(self) -> SimTime:
        return self.xfer_end - self.xfer_start if self.transferred else ZERO

    @property
    def claimed_at(self) -> SimTime:
        return self.exec_start - self.dispatch

    @property
    def queue_time(self) -> SimTime:
        """Waiting between readiness and core claim that is not spent moving bytes."""
        return self.claimed_at - self.ready - self.inbound_transfer_time

    @property
    def compute_time(self) -> SimTime:
        return self.exec_end - self.exec_start

    def check(self) -> None:
        """Raise AnalysisError unless the timestamp ordering invariant holds."""
        tid = self.task_id
        if self.exec_start is None or self.exec_end is None:
            raise AnalysisError(f"task {tid} never executed")
        if self.exec_start < self.dispatch:
            raise AnalysisError(f"task {tid}: exec_start precedes its dispatch delay")
        if (self.xfer_start is None) != (self.xfer_end is None):
            raise AnalysisError(f"task {tid}: incomplete transfer record")
        if self.transferred:
            if not (self.ready <= self.xfer_start <= self.xfer_end <= self.claimed_at):
                raise AnalysisError(f"task {tid}: transfer timestamps out of order")
        elif not self.ready <= self.claimed_at:
            raise AnalysisError(f"task {tid}: claimed before ready")
        if not self.exec_start < self.exec_end:
            raise AnalysisError(f"task {tid}: empty execution interval")
        if self.sampled_ops <= 0 or self.sampled_throughput <= 0:
            raise AnalysisError(f"task {tid}: non-positive samples")
        if self.compute_time != duration_for(self.sampled_ops, self.sampled_throughput):
            raise AnalysisError(f"task {tid}: execution interval does not match its samples")
        if self.return_end is not None and not self.exec_end <= self.return_start <= self.return_end:
            raise AnalysisError(f"task {tid}: return transfer out of order")

    def as_row(self) -> dict:
        def us(value: SimTime | None):
            return None if value is None else value.ticks

        return {
            "task_id": self.task_id,
            "resource": self.resource,
            "ready_us": us(self.ready),
            "xfer_start_us": us(self.xfer_start),
            "xfer_end_us": us(self.xfer_end),
            "exec_start_us": us(self.exec_start),
            "exec_end_us": us(self.exec_end),
            "ops": self.sampled_ops,
            "throughput": self.sampled_throughput,
            "stage": self.stage.value,
            "core": self.core,
            "queue_enter_us": us(self.queue_enter),
            "dispatch_us": us(self.dispatch),
            "return_start_us": us(self.return_start),
            "return_end_us": us(self.return_end),
        }


@dataclass(slots=True)
class Trace:
    """Per-task records plus the metadata needed to analyze them without re-simulating."""

    records: list[TaskRecord]
    seed: int
    strategy: str = ""
    config_digest: str = ""
    resource_cores: dict[str, int] = field(default_factory=dict)

    def record(self, task_id: int) -> TaskRecord:
        for rec in self.records:
            if rec.task_id == task_id:
                return rec
        raise KeyError(task_id)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame.from_records([r.as_row() for r in self.records], columns=TRACE_COLUMNS)
        for column in (c for c in TRACE_COLUMNS if c.endswith("_us")):
            frame[column] = frame[column].astype("Int64")
        return frame

    def fingerprint(self) -> str:
        """Canonical text of the records, equal for byte-identical traces."""
        return self.to_frame().to_csv(index=False)


@dataclass(slots=True)
class RunResult:
    trace: Trace
    ttc: SimTime
    transfer: SimTime
    queue: SimTime
    compute: SimTime
    dispatch: SimTime

    @property
    def phases(self) -> dict[str, SimTime]:
        return {
            "transfer": self.transfer,
            "queue": self.queue,
            "dispatch": self.dispatch,
            "compute": self.compute,
        }


def makespan(records: list[TaskRecord]) -> SimTime:
    """Latest completion minus earliest readiness."""
    start = min(r.ready for r in records)
    end = max(r.completion for r in records)
    return end - start


def phase_totals(records: list[TaskRecord]) -> dict[str, SimTime]:
    totals = {"transfer": ZERO, "queue": ZERO, "dispatch": ZERO, "compute": ZERO}
    for r in records:
        totals["transfer"] += r.transfer_time
        totals["queue"] += r.queue_time
        totals["dispatch"] += r.dispatch
        totals["compute"] += r.compute_time
    return totals
