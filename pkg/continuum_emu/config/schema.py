"""Published JSON Schema (Draft 2020-12) of the scenario document."""

SCHEMA_ID = "https://continuum-emu.invalid/schema/scenario-1.json"

_number = {"type": "number"}
_non_negative = {"type": "number", "minimum": 0}
_positive = {"type": "number", "exclusiveMinimum": 0}
_positive_int = {"type": "integer", "minimum": 1}
_non_negative_int = {"type": "integer", "minimum": 0}
_tier = {"enum": ["edge", "fog", "cloud"]}
_stage = {"enum": ["pre_processing", "analytics", "inference", "training", "generic"]}

DISTRIBUTION_SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"kind": {"const": "constant"}, "value": _non_negative},
            "required": ["kind", "value"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "normal"}, "mean": _number, "stddev": _non_negative},
            "required": ["kind", "mean", "stddev"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"kind": {"const": "uniform"}, "low": _number, "high": _number},
            "required": ["kind", "low", "high"],
            "additionalProperties": False,
        },
    ]
}

RESOURCE_SCHEMA = {
    "type": "object",
    "properties": {
        "id": {"type": "string", "minLength": 1},
        "tier": _tier,
        "num_cores": _positive_int,
        "ops_per_sec": _positive,
        "calibration": {
            "type": "object",
            "properties": {"measured_runtime_sec": _positive},
            "required": ["measured_runtime_sec"],
            "additionalProperties": False,
        },
        "perf_dist": DISTRIBUTION_SCHEMA,
        "dispatch_delay_sec": _non_negative,
        "throughput_floor_fraction": _positive,
    },
    "required": ["id", "tier", "num_cores"],
    "oneOf": [{"required": ["ops_per_sec"]}, {"required": ["calibration"]}],
    "additionalProperties": False,
}

LINK_SCHEMA = {
    "type": "object",
    "properties": {
        "src": {"type": "string", "minLength": 1},
        "dst": {"type": "string", "minLength": 1},
        "setup_overhead_sec": _non_negative,
        "latency_sec": _non_negative,
        "bandwidth_bytes_per_sec": _positive,
        "concurrency": {"enum": ["serial", "unlimited"]},
    },
    "required": ["src", "dst", "bandwidth_bytes_per_sec"],
    "additionalProperties": False,
}

OPS_DIST_SCHEMA = {
    "type": "object",
    "properties": {
        "dist": DISTRIBUTION_SCHEMA,
        "mode": {"enum": ["absolute", "multiplier"]},
        "floor": _positive,
    },
    "required": ["dist"],
    "additionalProperties": False,
}

KMEANS_SCHEMA = {
    "type": "object",
    "properties": {
        "n_points": _positive_int,
        "n_clusters": _positive_int,
        "n_iterations": _positive_int,
        "ops_per_point_cluster": _positive,
        "bytes_per_point": _positive,
        "variability": DISTRIBUTION_SCHEMA,
        "origin": {"type": "string", "minLength": 1},
    },
    "required": ["n_points", "n_clusters", "n_iterations"],
    "additionalProperties": False,
}

STAGE_PROFILE_SCHEMA = {
    "oneOf": [
        _stage,
        {
            "type": "object",
            "properties": {
                "stage": _stage,
                "ops_multiplier": _positive,
                "bytes_in_ratio": _non_negative,
                "bytes_out_ratio": _non_negative,
            },
            "required": ["stage"],
            "additionalProperties": False,
        },
    ]
}

PIPELINE_SCHEMA = {
    "type": "object",
    "properties": {
        "stages": {"type": "array", "items": STAGE_PROFILE_SCHEMA, "minItems": 1},
        "raw_ops": _positive,
        "raw_bytes": _positive_int,
        "tasks_per_stage": _positive_int,
        "origin": {"type": "string", "minLength": 1},
    },
    "required": ["stages", "raw_ops", "raw_bytes", "tasks_per_stage"],
    "additionalProperties": False,
}

ENSEMBLE_SCHEMA = {
    "type": "object",
    "properties": {
        "n_tasks": _positive_int,
        "num_ops": _positive,
        "origin": {"type": "string", "minLength": 1},
        "stage": _stage,
        "input_bytes": _non_negative_int,
        "output_bytes": _non_negative_int,
        "ops_dist": OPS_DIST_SCHEMA,
    },
    "required": ["n_tasks", "num_ops", "origin"],
    "additionalProperties": False,
}

TASK_SCHEMA = {
    "type": "object",
    "properties": {
        "id": _non_negative_int,
        "num_ops": _positive,
        "origin": {"type": "string", "minLength": 1},
        "stage": _stage,
        "input_bytes": _non_negative_int,
        "output_bytes": _non_negative_int,
        "stage_index": _non_negative_int,
        "depends_on": {"type": "array", "items": _non_negative_int},
    },
    "required": ["id", "num_ops", "origin"],
    "additionalProperties": False,
}

WORKLOAD_SCHEMA = {
    "type": "object",
    "properties": {
        "kmeans": KMEANS_SCHEMA,
        "pipeline": PIPELINE_SCHEMA,
        "ensemble": ENSEMBLE_SCHEMA,
        "tasks": {"type": "array", "items": TASK_SCHEMA, "minItems": 1},
        "dependency_mode": {"enum": ["independent", "sequential", "staged"]},
        "ops_dist": OPS_DIST_SCHEMA,
    },
    "oneOf": [
        {"required": ["kmeans"]},
        {"required": ["pipeline"]},
        {"required": ["ensemble"]},
        {"required": ["tasks"]},
    ],
    "additionalProperties": False,
}

STRATEGY_SCHEMA = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["edge_centric", "cloud_centric", "hybrid_threshold", "hybrid_stage", "explicit"]},
        "label": {"type": "string", "minLength": 1},
        "metric": {"enum": ["input_bytes", "num_ops"]},
        "threshold": _number,
        "below": _tier,
        "above": _tier,
        "stages": {"type": "object", "propertyNames": _stage, "additionalProperties": _tier},
        "assignment": {
            "type": "object",
            "propertyNames": {"pattern": "^[0-9]+$"},
            "additionalProperties": {"type": "string", "minLength": 1},
        },
    },
    "required": ["kind"],
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": "hybrid_threshold"}}},
            "then": {"required": ["metric", "threshold"]},
        },
        {
            "if": {"properties": {"kind": {"const": "explicit"}}},
            "then": {"required": ["assignment"]},
        },
    ],
    "additionalProperties": False,
}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "title": "Edge-to-cloud emulation scenario",
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "seed": {"type": "integer"},
        "resources": {"type": "array", "items": RESOURCE_SCHEMA, "minItems": 1},
        "links": {"type": "array", "items": LINK_SCHEMA},
        "workload": WORKLOAD_SCHEMA,
        "strategies": {"type": "array", "items": STRATEGY_SCHEMA, "minItems": 1},
        "engine": {
            "type": "object",
            "properties": {"return_outputs": {"type": "boolean"}},
            "additionalProperties": False,
        },
        "sweep": {
            "type": "object",
            "properties": {
                "path": {"type": "string", "minLength": 1},
                "values": {"type": "array", "minItems": 1},
            },
            "required": ["path", "values"],
            "additionalProperties": False,
        },
        "output": {
            "type": "object",
            "properties": {"dir": {"type": "string", "minLength": 1}},
            "additionalProperties": False,
        },
    },
    "required": ["resources", "workload", "strategies"],
    "additionalProperties": False,
}
