"""Data-movement cost model for tasks placed away from their data origin.

A transfer pays a fixed setup overhead (broker / connection establishment),
the link latency, and the payload time at the link bandwidth. Serial links
carry one transfer at a time in FIFO order; unlimited links never queue.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core.errors import ConfigurationError
from .core.model import Link, LinkConcurrency
from .core.simtime import SimTime, ceil_micros


@dataclass(frozen=True, slots=True)
class TransferRequest:
    task_id: int
    src: str
    dst: str
    bytes: int
    ready: SimTime

    def __post_init__(self):
        if self.src == self.dst:
            raise ConfigurationError(f"task {self.task_id}: transfer source and destination are both {self.src!r}")
        if self.bytes < 0:
            raise ConfigurationError(f"task {self.task_id}: transfer size must be >= 0")


def transfer_duration(link: Link, nbytes: int) -> SimTime:
    """setup_overhead + latency + ceil(bytes / bandwidth × 10⁶) µs."""
    payload = SimTime(ceil_micros(nbytes, link.bandwidth_bytes_per_sec))
    return link.setup_overhead + link.latency + payload


class LinkState:
    """Occupancy of one link during a run."""

    def __init__(self, link: Link):
        self.link = link
        self.free_at = SimTime(0)
        self.transfers = 0

    def schedule_transfer(self, req: TransferRequest) -> tuple[SimTime, SimTime]:
        """Reserve the link for `req`, returning (start, end).

        Callers submit requests in (ready time, task id) order; serial links
        then serve them FIFO.
        """
        if (req.src, req.dst) != self.link.key:
            raise ConfigurationError(
                f"task {req.task_id}: request {req.src}->{req.dst} does not match link {self.link.src}->{self.link.dst}"
            )
        duration = transfer_duration(self.link, req.bytes)
        if self.link.concurrency is LinkConcurrency.SERIAL:
            start = max(req.ready, self.free_at)
            end = start + duration
            self.free_at = end
        else:
            start = req.ready
            end = start + duration
        self.transfers += 1
        return start, end


def schedule_transfer(link_state: LinkState, req: TransferRequest) -> tuple[SimTime, SimTime]:
    return link_state.schedule_transfer(req)
