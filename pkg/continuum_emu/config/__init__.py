"""Scenario documents: JSON Schema, loading, overrides and digests."""
from .loader import (
    ScenarioConfig,
    apply_overrides,
    build_scenario,
    canonical_json,
    config_digest,
    load_scenario,
    parse_override,
    read_document,
    resolve_seed,
    set_path,
    validate_document,
)
from .schema import SCENARIO_SCHEMA

__all__ = [
    "SCENARIO_SCHEMA",
    "ScenarioConfig",
    "apply_overrides",
    "build_scenario",
    "canonical_json",
    "config_digest",
    "load_scenario",
    "parse_override",
    "read_document",
    "resolve_seed",
    "set_path",
    "validate_document",
]
