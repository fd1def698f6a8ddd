"""Per-resource occupancy during a run."""
from __future__ import annotations

from collections import deque

from ..core.model import Resource
from ..core.simtime import SimTime


def core_select(free_at: list[SimTime], now: SimTime | None = None) -> int:
    """Index of the core with the earliest free time; lowest index among ties.

    `now` does not change the choice. Whether the chosen core is actually idle
    at `now` is the caller's check.
    """
    if not free_at:
        raise ValueError("a resource needs at least one core")
    return min(range(len(free_at)), key=lambda i: (free_at[i], i))


class ResourceState:
    """FIFO queue and core reservations of one resource."""

    def __init__(self, resource: Resource):
        self.resource = resource
        self.free_at: list[SimTime] = [SimTime(0)] * resource.num_cores
        self.queue: deque[int] = deque()

    def enqueue(self, task_id: int) -> None:
        self.queue.append(task_id)

    def idle_core(self, now: SimTime) -> int | None:
        """Core to dispatch onto at `now`, or None when every core is busy."""
        core = core_select(self.free_at, now)
        return core if self.free_at[core] <= now else None

    def reserve(self, core: int, until: SimTime) -> None:
        self.free_at[core] = until
