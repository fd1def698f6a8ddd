"""Event queue with deterministic tie-breaking.

Events are ordered by (time, kind priority, enqueue sequence). The kind
priority processes completions before arrivals at the same instant, and
arrivals before the starts they may trigger.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from enum import Enum

from ..core.simtime import SimTime


class EventKind(str, Enum):
    TRANSFER_END = "transfer_end"
    TASK_END = "task_end"
    TASK_READY = "task_ready"
    TRANSFER_START = "transfer_start"
    TASK_START = "task_start"


KIND_PRIORITY = {
    EventKind.TRANSFER_END: 0,
    EventKind.TASK_END: 1,
    EventKind.TASK_READY: 2,
    EventKind.TRANSFER_START: 3,
    EventKind.TASK_START: 4,
}


@dataclass(frozen=True, slots=True)
class Event:
    time: SimTime
    seq: int
    kind: EventKind
    task_id: int
    resource_id: str
    link: tuple[str, str] | None = None
    returning: bool = False

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.time.ticks, KIND_PRIORITY[self.kind], self.seq)


class EventQueue:
    def __init__(self) -> None:
        self._pq: list[tuple[tuple[int, int, int], Event]] = []
        self._counter = itertools.count()
        self.processed = 0

    def __bool__(self) -> bool:
        return bool(self._pq)

    def __len__(self) -> int:
        return len(self._pq)

    def push(
        self,
        time: SimTime,
        kind: EventKind,
        task_id: int,
        resource_id: str,
        link: tuple[str, str] | None = None,
        returning: bool = False,
    ) -> Event:
        event = Event(time, next(self._counter), kind, task_id, resource_id, link, returning)
        heapq.heappush(self._pq, (event.sort_key, event))
        return event

    def peek_time(self) -> SimTime | None:
        """Time of the next event, or None when the queue is empty."""
        return self._pq[0][1].time if self._pq else None

    def pop(self) -> Event:
        _, event = heapq.heappop(self._pq)
        self.processed += 1
        return event
