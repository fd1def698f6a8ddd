"""Statistical distributions for workload and resource variability.

Draw consumption per sample (against an RngStream):
    constant: 1 draw
    uniform:  1 draw
    normal:   2 draws (Box-Muller, cosine branch only)

Normal samples are not truncated here. Callers clamp to their own floors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

from .errors import ConfigurationError
from .rng import RngStream

NORMAL_DRAWS_PER_SAMPLE = 2


class DistributionKind(str, Enum):
    CONSTANT = "constant"
    NORMAL = "normal"
    UNIFORM = "uniform"


def _finite(name: str, value: Any) -> float:
    try:
        number = float(value)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"{name} must be a number, got {value!r}") from e
    if not math.isfinite(number):
        raise ConfigurationError(f"{name} must be finite, got {value!r}")
    return number


@dataclass(frozen=True, slots=True)
class Distribution:
    """A constant, normal or uniform distribution.

    Parameters by kind:
        constant: value (finite, non-negative)
        normal:   mean, stddev (stddev >= 0)
        uniform:  low, high (low <= high)
    """

    kind: DistributionKind
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self):
        try:
            kind = DistributionKind(self.kind)
        except ValueError as e:
            raise ConfigurationError(f"unknown distribution kind {self.kind!r}") from e
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "a", _finite("distribution parameter", self.a))
        object.__setattr__(self, "b", _finite("distribution parameter", self.b))
        if kind is DistributionKind.CONSTANT and self.a < 0:
            raise ConfigurationError(f"constant value must be non-negative, got {self.a}")
        if kind is DistributionKind.NORMAL and self.b < 0:
            raise ConfigurationError(f"normal stddev must be >= 0, got {self.b}")
        if kind is DistributionKind.UNIFORM and self.a > self.b:
            raise ConfigurationError(f"uniform low {self.a} exceeds high {self.b}")

    @classmethod
    def constant(cls, value: float) -> Distribution:
        return cls(DistributionKind.CONSTANT, value)

    @classmethod
    def normal(cls, mean: float, stddev: float) -> Distribution:
        return cls(DistributionKind.NORMAL, mean, stddev)

    @classmethod
    def uniform(cls, low: float, high: float) -> Distribution:
        return cls(DistributionKind.UNIFORM, low, high)

    @classmethod
    def from_dict(cls, data: dict) -> Distribution:
        kind = data.get("kind")
        if kind == DistributionKind.CONSTANT.value:
            return cls.constant(data.get("value"))
        if kind == DistributionKind.NORMAL.value:
            return cls.normal(data.get("mean"), data.get("stddev"))
        if kind == DistributionKind.UNIFORM.value:
            return cls.uniform(data.get("low"), data.get("high"))
        raise ConfigurationError(f"unknown distribution kind {kind!r}")

    def to_dict(self) -> dict:
        if self.kind is DistributionKind.CONSTANT:
            return {"kind": "constant", "value": self.a}
        if self.kind is DistributionKind.NORMAL:
            return {"kind": "normal", "mean": self.a, "stddev": self.b}
        return {"kind": "uniform", "low": self.a, "high": self.b}

    @property
    def mean(self) -> float:
        if self.kind is DistributionKind.UNIFORM:
            return (self.a + self.b) / 2
        return self.a

    @property
    def is_degenerate(self) -> bool:
        """True when every sample equals the mean."""
        if self.kind is DistributionKind.CONSTANT:
            return True
        if self.kind is DistributionKind.NORMAL:
            return self.b == 0
        return self.a == self.b

    def sample(self, rng: RngStream) -> float:
        return sample(self, rng)


def sample(dist: Distribution, rng: RngStream) -> float:
    """Draw one value from `dist` using `rng`."""
    if dist.kind is DistributionKind.CONSTANT:
        rng.uniform01()
        return dist.a
    if dist.kind is DistributionKind.UNIFORM:
        u = rng.uniform01()
        if dist.a == dist.b:
            return dist.a
        return dist.a + (dist.b - dist.a) * u
    # Box-Muller instead of Generator.normal: exactly two draws per sample
    # 1 - u lies in (0, 1], so the log is finite
    u1 = 1.0 - rng.uniform01()
    u2 = rng.uniform01()
    if dist.b == 0:
        return dist.a
    z = math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)
    return dist.a + dist.b * z
