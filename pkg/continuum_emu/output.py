"""Result files: summary.json, trace.csv and sweep.csv.

Every file carries the CSV schema version, the seed and the config digest.
CSV files start with one metadata comment line, then a regular header:

    # schema_version=1 seed=42 config_digest=ab12...

Nothing time-of-day dependent is written unless `include_wall_clock` is set,
so identical config and seed give byte-identical files.
"""
from __future__ import annotations

import json
import logging
from datetime import datetime, timezone
from pathlib import Path

import pandas as pd

from .constants import CSV_SCHEMA_VERSION, SUMMARY_FILE, SWEEP_FILE, TRACE_FILE
from .placement import Comparison

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "value",
    "strategy",
    "ttc_us",
    "transfer_us",
    "queue_us",
    "dispatch_us",
    "compute_us",
    "error",
]


def metadata_line(seed: int, config_digest: str) -> str:
    return f"# schema_version={CSV_SCHEMA_VERSION} seed={seed} config_digest={config_digest}\n"


def parse_metadata_line(line: str) -> dict[str, str]:
    """Inverse of metadata_line()."""
    if not line.startswith("#"):
        return {}
    pairs = (item.split("=", 1) for item in line[1:].split() if "=" in item)
    return {key: value for key, value in pairs}


def summary_document(comparison: Comparison, config_digest: str, include_wall_clock: bool = False) -> dict:
    document = {
        "schema_version": CSV_SCHEMA_VERSION,
        "seed": comparison.seed,
        "config_digest": config_digest,
        "best": comparison.best.label,
        "strategies": [
            {
                "label": row.label,
                "kind": row.spec.kind.value,
                "delta_vs_best": row.delta_vs_best,
                **row.summary.to_dict(),
            }
            for row in comparison.rows
        ],
    }
    if include_wall_clock:
        document["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return document


def write_summary(
    out_dir: str | Path,
    comparison: Comparison,
    config_digest: str,
    include_wall_clock: bool = False,
) -> Path:
    path = Path(out_dir) / SUMMARY_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    document = summary_document(comparison, config_digest, include_wall_clock)
    path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def trace_frame(comparison: Comparison) -> pd.DataFrame:
    """All strategies' traces in one table, with a leading strategy column."""
    frames = []
    for row in comparison.rows:
        frame = row.result.trace.to_frame()
        frame.insert(0, "strategy", row.label)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def write_trace(out_dir: str | Path, comparison: Comparison, config_digest: str) -> Path:
    path = Path(out_dir) / TRACE_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.write(metadata_line(comparison.seed, config_digest))
        trace_frame(comparison).to_csv(handle, index=False, lineterminator="\n")
    logger.info("wrote %s", path)
    return path


def value_cell(value) -> str | int | float:
    """Sweep values as they appear in the CSV; structured values as compact JSON."""
    if isinstance(value, (dict, list, bool)) or value is None:
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return value


def write_sweep(out_dir: str | Path, body: str, seed: int, config_digest: str) -> Path:
    """Write an already merged sweep body (header plus rows)."""
    path = Path(out_dir) / SWEEP_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.write(metadata_line(seed, config_digest))
        handle.write(body)
    logger.info("wrote %s", path)
    return path


def read_result_csv(path: str | Path) -> tuple[dict[str, str], pd.DataFrame]:
    """Metadata and table of a trace.csv or sweep.csv."""
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        first = handle.readline()
    metadata = parse_metadata_line(first)
    frame = pd.read_csv(path, skiprows=1 if metadata else 0, keep_default_na=False, na_values=[""])
    return metadata, frame
