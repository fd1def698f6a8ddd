"""Simulated time in integer microseconds.

Every time quantity in the emulator (durations, timestamps, delays) is a
SimTime. Integer ticks keep runs bit-for-bit reproducible across platforms;
conversions from seconds go through the decimal representation so that values
written in a config (e.g. 0.003 s) land on the exact microsecond.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, InvalidOperation
from fractions import Fraction

from .errors import ComputationError

TICKS_PER_SECOND = 1_000_000
MAX_TICKS = 2**63 - 1


def _checked(ticks: int) -> int:
    if ticks < 0:
        raise ComputationError(f"simulated time cannot be negative ({ticks} us)")
    if ticks > MAX_TICKS:
        raise ComputationError(f"simulated time overflow ({ticks} us > {MAX_TICKS} us)")
    return ticks


@dataclass(frozen=True, order=True, slots=True)
class SimTime:
    """Non-negative count of simulated microseconds."""

    ticks: int = 0

    def __post_init__(self):
        if isinstance(self.ticks, bool) or not isinstance(self.ticks, int):
            raise ComputationError(f"SimTime ticks must be an integer, got {self.ticks!r}")
        _checked(self.ticks)

    @classmethod
    def from_seconds(cls, seconds: float | int | str | Decimal) -> SimTime:
        """Convert seconds to ticks, rounding half-even at microsecond granularity."""
        try:
            value = Decimal(str(seconds))
        except InvalidOperation as e:
            raise ComputationError(f"not a number of seconds: {seconds!r}") from e
        if not value.is_finite():
            raise ComputationError(f"non-finite seconds: {seconds!r}")
        ticks = (value * TICKS_PER_SECOND).to_integral_value(rounding=ROUND_HALF_EVEN)
        return cls(_checked(int(ticks)))

    @property
    def seconds(self) -> float:
        return self.ticks / TICKS_PER_SECOND

    def to_decimal_seconds(self) -> Decimal:
        """Exact seconds value, e.g. Decimal('1.650000')."""
        return Decimal(self.ticks).scaleb(-6)

    def __add__(self, other: SimTime) -> SimTime:
        if not isinstance(other, SimTime):
            return NotImplemented
        return SimTime(_checked(self.ticks + other.ticks))

    def __sub__(self, other: SimTime) -> SimTime:
        if not isinstance(other, SimTime):
            return NotImplemented
        return SimTime(_checked(self.ticks - other.ticks))

    def __mul__(self, factor: int) -> SimTime:
        if isinstance(factor, bool) or not isinstance(factor, int):
            return NotImplemented
        return SimTime(_checked(self.ticks * factor))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.ticks != 0

    def __str__(self) -> str:
        return f"{self.to_decimal_seconds()}s"


ZERO = SimTime(0)


def ceil_micros(numerator: float | int, denominator: float | int) -> int:
    """ceil(numerator / denominator × 10⁶) computed exactly on the float values."""
    for value in (numerator, denominator):
        if not math.isfinite(value):
            raise ComputationError(f"non-finite input to time computation: {value!r}")
    if denominator <= 0:
        raise ComputationError(f"rate must be positive, got {denominator!r}")
    if numerator < 0:
        raise ComputationError(f"amount must be non-negative, got {numerator!r}")
    exact = Fraction(numerator) * TICKS_PER_SECOND / Fraction(denominator)
    return _checked(math.ceil(exact))


def duration_for(ops: float, throughput_ops_per_sec: float) -> SimTime:
    """Execution time of `ops` operations on a core running at the given throughput.

    Returns ceil(ops / throughput × 10⁶) microseconds, so any positive amount of
    work takes at least one tick.
    """
    if not math.isfinite(ops) or not math.isfinite(throughput_ops_per_sec):
        raise ComputationError(
            f"non-finite duration inputs: ops={ops!r}, throughput={throughput_ops_per_sec!r}"
        )
    if ops <= 0:
        raise ComputationError(f"ops must be positive, got {ops!r}")
    return SimTime(ceil_micros(ops, throughput_ops_per_sec))
