"""Discrete-event execution of a placed workload.

One run is single-threaded and owns all of its mutable state: RNG streams,
core reservations, link occupancy and the event queue. Nothing is shared
between runs, so sweeps may execute runs concurrently.

Task lifecycle:
    1. task_ready at t=0, or when the last predecessor finishes executing
    2. if placed away from its origin with input bytes to move, the transfer
       occupies the (origin, assigned) link; requests made at the same instant
       reserve their links in task id order
    3. the task joins the resource's FIFO queue and claims the earliest-free
       core once one is idle; the core is reserved through the dispatch delay
    4. execution lasts duration_for(sampled ops, sampled throughput)
"""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Iterable

import networkx as nx

from ..core.errors import PlanError
from ..core.model import Link, Resource, Workload, link_index, resource_index
from ..core.rng import StreamRegistry
from ..core.simtime import ZERO, SimTime, duration_for
from ..transfer import LinkState, TransferRequest, schedule_transfer
from .events import EventKind, EventQueue
from .state import ResourceState
from .trace import RunResult, TaskRecord, Trace, makespan, phase_totals

if TYPE_CHECKING:
    from ..placement import PlacementPlan

logger = logging.getLogger(__name__)

OPS_STREAM = "workload.ops"


def perf_stream_label(resource_id: str) -> str:
    return f"resource.{resource_id}.perf"


def dependency_graph(workload: Workload) -> nx.DiGraph:
    """Edges point from predecessor to dependent task."""
    graph = nx.DiGraph()
    graph.add_nodes_from(t.id for t in workload.ordered())
    for task_id, preds in workload.predecessors().items():
        for pred in sorted(preds):
            graph.add_edge(pred, task_id)
    return graph


def validate_plan(
    workload: Workload,
    resources: Iterable[Resource],
    links: Iterable[Link],
    plan: PlacementPlan,
) -> None:
    """Raise PlanError for anything that would stop the run part-way.

    Checks: every task assigned to a known resource, every origin known, a link
    from origin to resource for every cross-resource assignment, dependencies
    naming known tasks and forming no cycle.
    """
    by_id = resource_index(resources)
    by_link = link_index(links)
    task_ids = {t.id for t in workload.tasks}

    for task in workload.ordered():
        if task.id not in plan.assignment:
            raise PlanError(f"task {task.id} is not assigned to any resource")
        assigned = plan.assignment[task.id]
        if assigned not in by_id:
            raise PlanError(f"task {task.id} is assigned to unknown resource {assigned!r}")
        if task.origin not in by_id:
            raise PlanError(f"task {task.id} originates at unknown resource {task.origin!r}")
        if assigned != task.origin and (task.origin, assigned) not in by_link:
            raise PlanError(f"missing link ({task.origin}, {assigned}) needed by task {task.id}")
        unknown = sorted(set(task.depends_on) - task_ids)
        if unknown:
            raise PlanError(f"task {task.id} depends on unknown tasks {unknown}")

    extra = sorted(set(plan.assignment) - task_ids)
    if extra:
        raise PlanError(f"plan assigns unknown tasks {extra}")

    graph = dependency_graph(workload)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [edge[0] for edge in nx.find_cycle(graph)]
        raise PlanError(f"dependency cycle among tasks {cycle}")


class EmulationRun:
    """Mutable state of one run; use `run()` rather than this class directly."""

    def __init__(
        self,
        workload: Workload,
        resources: list[Resource],
        links: list[Link],
        plan: PlacementPlan,
        seed: int,
        return_outputs: bool = False,
    ):
        self.workload = workload
        self.plan = plan
        self.seed = seed
        self.return_outputs = return_outputs
        self.resources = resource_index(resources)
        self.states = {rid: ResourceState(r) for rid, r in self.resources.items()}
        self.links = {key: LinkState(link) for key, link in link_index(links).items()}
        self.streams = StreamRegistry(seed)
        self.queue = EventQueue()
        self.tasks = {t.id: t for t in workload.tasks}

        preds = workload.predecessors()
        self.waiting_on = {tid: len(p) for tid, p in preds.items()}
        self.dependents: dict[int, list[int]] = {tid: [] for tid in preds}
        for task in workload.ordered():
            for pred in sorted(preds[task.id]):
                self.dependents[pred].append(task.id)

        self.sampled_ops = workload.sampled_ops(self.streams.stream(OPS_STREAM))
        self.records: dict[int, TaskRecord] = {}
        # (request, returning) made at the current instant, not yet on a link
        self.pending: list[tuple[TransferRequest, bool]] = []

    def execute(self) -> RunResult:
        for task in self.workload.ordered():
            if self.waiting_on[task.id] == 0:
                self.queue.push(ZERO, EventKind.TASK_READY, task.id, self.plan.assignment[task.id])

        handlers = {
            EventKind.TASK_READY: self._on_ready,
            EventKind.TRANSFER_START: self._on_transfer_start,
            EventKind.TRANSFER_END: self._on_transfer_end,
            EventKind.TASK_START: self._on_task_start,
            EventKind.TASK_END: self._on_task_end,
        }
        while self.queue:
            event = self.queue.pop()
            handlers[event.kind](event)
            if self.pending and self.queue.peek_time() != event.time:
                self._flush_transfers()

        return self._result()

    def _request_transfer(self, req: TransferRequest, returning: bool = False) -> None:
        self.pending.append((req, returning))

    def _flush_transfers(self) -> None:
        """Reserve links for this instant's requests, lowest task id first."""
        batch = sorted(self.pending, key=lambda item: (item[0].ready, item[0].task_id, item[1]))
        self.pending.clear()
        for req, returning in batch:
            key = (req.src, req.dst)
            resource_id = req.src if returning else req.dst
            start, end = schedule_transfer(self.links[key], req)
            self.queue.push(start, EventKind.TRANSFER_START, req.task_id, resource_id, link=key, returning=returning)
            self.queue.push(end, EventKind.TRANSFER_END, req.task_id, resource_id, link=key, returning=returning)

    def _on_ready(self, event) -> None:
        task = self.tasks[event.task_id]
        assigned = event.resource_id
        self.records[task.id] = TaskRecord(
            task_id=task.id, resource=assigned, stage=task.stage, ready=event.time
        )
        if assigned != task.origin and task.input_bytes > 0:
            self._request_transfer(TransferRequest(task.id, task.origin, assigned, task.input_bytes, event.time))
        else:
            self._arrive(task.id, assigned, event.time)

    def _on_transfer_start(self, event) -> None:
        rec = self.records[event.task_id]
        if event.returning:
            rec.return_start = event.time
        else:
            rec.xfer_start = event.time

    def _on_transfer_end(self, event) -> None:
        rec = self.records[event.task_id]
        if event.returning:
            rec.return_end = event.time
            return
        rec.xfer_end = event.time
        self._arrive(event.task_id, event.resource_id, event.time)

    def _on_task_start(self, event) -> None:
        self.records[event.task_id].exec_start = event.time

    def _on_task_end(self, event) -> None:
        task = self.tasks[event.task_id]
        rec = self.records[task.id]
        rec.exec_end = event.time

        if self.return_outputs and task.output_bytes > 0 and rec.resource != task.origin:
            if (rec.resource, task.origin) in self.links:
                req = TransferRequest(task.id, rec.resource, task.origin, task.output_bytes, event.time)
                self._request_transfer(req, returning=True)

        for dependent in self.dependents[task.id]:
            self.waiting_on[dependent] -= 1
            if self.waiting_on[dependent] == 0:
                self.queue.push(event.time, EventKind.TASK_READY, dependent, self.plan.assignment[dependent])

        self._dispatch(event.resource_id, event.time)

    def _arrive(self, task_id: int, resource_id: str, now: SimTime) -> None:
        self.records[task_id].queue_enter = now
        self.states[resource_id].enqueue(task_id)
        self._dispatch(resource_id, now)

    def _dispatch(self, resource_id: str, now: SimTime) -> None:
        state = self.states[resource_id]
        resource = state.resource
        while state.queue:
            core = state.idle_core(now)
            if core is None:
                return
            task_id = state.queue.popleft()
            rec = self.records[task_id]
            throughput = resource.sample_throughput(self.streams.stream(perf_stream_label(resource_id)))
            ops = self.sampled_ops[task_id]
            start = now + resource.dispatch_delay
            end = start + duration_for(ops, throughput)
            state.reserve(core, end)
            rec.core = core
            rec.dispatch = resource.dispatch_delay
            rec.sampled_ops = ops
            rec.sampled_throughput = throughput
            self.queue.push(start, EventKind.TASK_START, task_id, resource_id)
            self.queue.push(end, EventKind.TASK_END, task_id, resource_id)

    def _result(self) -> RunResult:
        records = [self.records[tid] for tid in sorted(self.records)]
        trace = Trace(
            records=records,
            seed=self.seed,
            strategy=self.plan.label,
            resource_cores={rid: r.num_cores for rid, r in self.resources.items()},
        )
        totals = phase_totals(records)
        return RunResult(
            trace=trace,
            ttc=makespan(records),
            transfer=totals["transfer"],
            queue=totals["queue"],
            compute=totals["compute"],
            dispatch=totals["dispatch"],
        )


def run(
    workload: Workload,
    resources: Iterable[Resource],
    links: Iterable[Link],
    plan: PlacementPlan,
    seed: int,
    return_outputs: bool = False,
) -> RunResult:
    """Emulate `workload` placed by `plan` and return its trace and TTC.

    The plan is validated before any simulation step; a failing plan raises
    PlanError and nothing runs.
    """
    resources = list(resources)
    links = list(links)
    validate_plan(workload, resources, links, plan)
    emulation = EmulationRun(workload, resources, links, plan, seed, return_outputs)
    logger.debug("run %s: %d tasks on %d resources (seed=%d)", plan.label, len(workload), len(resources), seed)
    result = emulation.execute()
    logger.debug("run %s finished: ttc=%s after %d events", plan.label, result.ttc, emulation.queue.processed)
    return result
