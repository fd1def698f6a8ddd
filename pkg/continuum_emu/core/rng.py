"""Deterministic per-consumer random streams.

Each consumer of randomness (the workload's ops sampling, every resource's
throughput sampling) owns a stream derived from the run seed and a stable
label. Streams are numpy PCG64 generators seeded through a SeedSequence whose
spawn key is a SHA-256 digest of the label, so the draws of one consumer never
depend on how many draws another consumer made, nor on the platform.
"""
from __future__ import annotations

import hashlib

import numpy as np

SEED_MASK = 2**64 - 1


def _label_key(label: str) -> tuple[int, ...]:
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return tuple(int.from_bytes(digest[i:i + 4], "little") for i in range(0, 16, 4))


class RngStream:
    """Seeded uniform source for one labelled consumer.

    `draws` counts how many unit-interval values have been consumed, which is
    what the distribution samplers document their consumption against.
    """

    def __init__(self, seed: int, label: str):
        self.seed = int(seed) & SEED_MASK
        self.label = label
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=_label_key(label))
        self._generator = np.random.Generator(np.random.PCG64(sequence))
        self.draws = 0

    def uniform01(self) -> float:
        """One draw from [0, 1)."""
        self.draws += 1
        return float(self._generator.random())

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, label={self.label!r}, draws={self.draws})"


class StreamRegistry:
    """Lazily creates one RngStream per label for a single engine run."""

    def __init__(self, seed: int):
        self.seed = seed
        self._streams: dict[str, RngStream] = {}

    def stream(self, label: str) -> RngStream:
        if label not in self._streams:
            self._streams[label] = RngStream(self.seed, label)
        return self._streams[label]
