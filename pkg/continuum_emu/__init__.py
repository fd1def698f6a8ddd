"""Deterministic discrete-event emulation of task placement across the edge-to-cloud continuum."""

__version__ = "0.1.0"
