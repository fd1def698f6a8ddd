"""Discrete-event engine: event queue, resource state, trace and run()."""
from .events import Event, EventKind, EventQueue
from .runner import EmulationRun, dependency_graph, run, validate_plan
from .state import ResourceState, core_select
from .trace import TRACE_COLUMNS, RunResult, TaskRecord, Trace

__all__ = [
    "EmulationRun",
    "Event",
    "EventKind",
    "EventQueue",
    "ResourceState",
    "RunResult",
    "TRACE_COLUMNS",
    "TaskRecord",
    "Trace",
    "core_select",
    "dependency_graph",
    "run",
    "validate_plan",
]
