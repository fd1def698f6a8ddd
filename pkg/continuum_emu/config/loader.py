"""Scenario documents: parsing, overrides, schema validation, digest and model building.

Seed precedence: --seed flag > CONTINUUM_EMU_SEED > document "seed" > 0.
"""
from __future__ import annotations

import copy
import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from ..constants import DEFAULT_OUTPUT_DIR, SEED_ENV_VAR
from ..core.distributions import Distribution
from ..core.errors import ConfigurationError, SchemaError
from ..core.model import (
    DependencyMode,
    Link,
    OpsMode,
    OpsVariability,
    Resource,
    Task,
    Workload,
    link_index,
    resource_index,
)
from ..core.simtime import SimTime
from ..placement import StrategySpec
from ..utils.stages import parse_stage
from ..workloads import (
    KMeansSpec,
    StageProfile,
    calibrate_throughput,
    ensemble_workload,
    kmeans_workload,
    pipeline_workload,
)
from .schema import SCENARIO_SCHEMA

logger = logging.getLogger(__name__)

_VALIDATOR = Draft202012Validator(SCENARIO_SCHEMA)


@dataclass(slots=True)
class ScenarioConfig:
    """Everything a run or sweep needs, built from one validated document."""

    document: dict[str, Any]
    digest: str
    seed: int
    resources: list[Resource]
    links: list[Link]
    workload: Workload
    strategies: list[StrategySpec]
    return_outputs: bool = False
    output_dir: str = DEFAULT_OUTPUT_DIR
    sweep: dict[str, Any] | None = None
    kmeans: KMeansSpec | None = field(default=None)


def read_document(path: str | Path) -> dict[str, Any]:
    """Parse a scenario file, reporting the line of any syntax error."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SchemaError(f"cannot read config: {e.strerror or e}", field="<file>") from e
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg}", field="<document>", line=e.lineno) from e
    if not isinstance(document, dict):
        raise SchemaError("top level must be an object")
    return document


def _segments(path: str) -> list[str | int]:
    if not path:
        raise SchemaError("empty path", field="<override>")
    return [int(part) if part.isdigit() else part for part in path.split(".")]


def set_path(document: dict[str, Any], path: str, value: Any) -> dict[str, Any]:
    """Copy of `document` with the dotted `path` set to `value`.

    Integer segments index lists; missing object keys are created.
    """
    result = copy.deepcopy(document)
    node: Any = result
    parts = _segments(path)
    for i, part in enumerate(parts):
        last = i == len(parts) - 1
        if isinstance(node, list):
            if not isinstance(part, int) or part >= len(node):
                raise SchemaError(f"no list element {part!r}", field=path)
            if last:
                node[part] = value
            else:
                node = node[part]
        elif isinstance(node, dict):
            key = str(part)
            if last:
                node[key] = value
            else:
                node = node.setdefault(key, {})
        else:
            raise SchemaError("path descends into a scalar", field=path)
    return result


def parse_override(text: str) -> tuple[str, Any]:
    """'a.b=value' -> ('a.b', value); the value is JSON when it parses, else a string."""
    if "=" not in text:
        raise SchemaError(f"override {text!r} must look like path=value", field="<override>")
    path, raw = text.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return path.strip(), value


def apply_overrides(document: dict[str, Any], overrides: list[str] | None) -> dict[str, Any]:
    for text in overrides or []:
        path, value = parse_override(text)
        document = set_path(document, path, value)
    return document


def validate_document(document: dict[str, Any]) -> None:
    """Raise SchemaError naming the offending field for the most relevant violation."""
    errors = sorted(_VALIDATOR.iter_errors(document), key=lambda e: list(e.absolute_path))
    if not errors:
        return
    for error in errors:
        logger.debug("schema violation at %s: %s", error.json_path, error.message)
    error = best_match(errors)
    field_path = ".".join(str(p) for p in error.absolute_path) or "<document>"
    raise SchemaError(error.message, field=field_path)


def canonical_json(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def config_digest(document: dict[str, Any]) -> str:
    return hashlib.sha256(canonical_json(document).encode("utf-8")).hexdigest()


def resolve_seed(document: dict[str, Any], cli_seed: int | None = None) -> int:
    if cli_seed is not None:
        return int(cli_seed)
    env_value = os.environ.get(SEED_ENV_VAR)
    if env_value not in (None, ""):
        try:
            return int(env_value)
        except ValueError as e:
            raise SchemaError(f"{SEED_ENV_VAR} must be an integer, got {env_value!r}", field=SEED_ENV_VAR) from e
    return int(document.get("seed", 0))


def _distribution(data: dict | None) -> Distribution | None:
    return Distribution.from_dict(data) if data else None


def _ops_variability(data: dict | None) -> OpsVariability | None:
    if not data:
        return None
    return OpsVariability(
        dist=Distribution.from_dict(data["dist"]),
        mode=OpsMode(data.get("mode", OpsMode.MULTIPLIER.value)),
        floor=data.get("floor", 1.0),
    )


def build_workload(data: dict[str, Any]) -> tuple[Workload, KMeansSpec | None]:
    if "kmeans" in data:
        spec = KMeansSpec.from_dict(data["kmeans"])
        return kmeans_workload(spec), spec
    if "pipeline" in data:
        p = data["pipeline"]
        workload = pipeline_workload(
            stages=[StageProfile.from_dict(s) for s in p["stages"]],
            raw_ops=p["raw_ops"],
            raw_bytes=p["raw_bytes"],
            tasks_per_stage=p["tasks_per_stage"],
            origin=p.get("origin", "edge"),
        )
        return workload, None
    if "ensemble" in data:
        e = data["ensemble"]
        variability = _ops_variability(e.get("ops_dist"))
        workload = ensemble_workload(
            n_tasks=e["n_tasks"],
            num_ops=e["num_ops"],
            origin=e["origin"],
            ops_dist=variability.dist if variability else None,
            mode=variability.mode if variability else OpsMode.MULTIPLIER,
            stage=parse_stage(e.get("stage", "generic")),
            input_bytes=e.get("input_bytes", 0),
            output_bytes=e.get("output_bytes", 0),
        )
        return workload, None
    tasks = tuple(
        Task(
            id=t["id"],
            num_ops=t["num_ops"],
            origin=t["origin"],
            stage=parse_stage(t.get("stage", "generic")),
            input_bytes=t.get("input_bytes", 0),
            output_bytes=t.get("output_bytes", 0),
            sequence_index=i,
            stage_index=t.get("stage_index", 0),
            depends_on=tuple(t.get("depends_on", ())),
        )
        for i, t in enumerate(data["tasks"])
    )
    workload = Workload(
        tasks=tasks,
        dependency_mode=DependencyMode(data.get("dependency_mode", "independent")),
        ops_variability=_ops_variability(data.get("ops_dist")),
    )
    return workload, None


def build_resources(items: list[dict[str, Any]], kmeans: KMeansSpec | None) -> list[Resource]:
    resources = []
    for i, item in enumerate(items):
        if "calibration" in item:
            if kmeans is None:
                raise SchemaError("calibration requires a kmeans workload", field=f"resources.{i}.calibration")
            ops_per_sec = calibrate_throughput(item["calibration"]["measured_runtime_sec"], kmeans)
            logger.info("resource %s calibrated to %.6g ops/s", item["id"], ops_per_sec)
        else:
            ops_per_sec = item["ops_per_sec"]
        extra = {}
        if "throughput_floor_fraction" in item:
            extra["throughput_floor_fraction"] = item["throughput_floor_fraction"]
        resources.append(Resource(
            id=item["id"],
            tier=item["tier"],
            num_cores=item["num_cores"],
            ops_per_sec=ops_per_sec,
            perf_dist=_distribution(item.get("perf_dist")),
            dispatch_delay=SimTime.from_seconds(item.get("dispatch_delay_sec", 0)),
            **extra,
        ))
    resource_index(resources)
    return resources


def build_links(items: list[dict[str, Any]], resources: list[Resource]) -> list[Link]:
    known = {r.id for r in resources}
    links = []
    for i, item in enumerate(items):
        for end in ("src", "dst"):
            if item[end] not in known:
                raise SchemaError(f"unknown resource {item[end]!r}", field=f"links.{i}.{end}")
        links.append(Link(
            src=item["src"],
            dst=item["dst"],
            bandwidth_bytes_per_sec=item["bandwidth_bytes_per_sec"],
            setup_overhead=SimTime.from_seconds(item.get("setup_overhead_sec", 0)),
            latency=SimTime.from_seconds(item.get("latency_sec", 0)),
            concurrency=item.get("concurrency", "serial"),
        ))
    link_index(links)
    return links


def build_scenario(document: dict[str, Any], cli_seed: int | None = None) -> ScenarioConfig:
    """Validate `document` and build the domain model it describes."""
    validate_document(document)
    try:
        workload, kmeans = build_workload(document["workload"])
        resources = build_resources(document["resources"], kmeans)
        links = build_links(document.get("links", []), resources)
        strategies = [StrategySpec.from_dict(s) for s in document["strategies"]]
    except SchemaError:
        raise
    except ConfigurationError as e:
        raise SchemaError(str(e)) from e

    return ScenarioConfig(
        document=document,
        digest=config_digest(document),
        seed=resolve_seed(document, cli_seed),
        resources=resources,
        links=links,
        workload=workload,
        strategies=strategies,
        return_outputs=bool(document.get("engine", {}).get("return_outputs", False)),
        output_dir=document.get("output", {}).get("dir", DEFAULT_OUTPUT_DIR),
        sweep=document.get("sweep"),
        kmeans=kmeans,
    )


def load_scenario(
    path: str | Path,
    overrides: list[str] | None = None,
    cli_seed: int | None = None,
) -> ScenarioConfig:
    document = apply_overrides(read_document(path), overrides)
    return build_scenario(document, cli_seed)
