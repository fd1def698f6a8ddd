"""Parameter sweeps: one emulation per (sweep value x strategy).

Points run concurrently in worker threads, at most `jobs` at a time. The
emulations are pure Python and hold the GIL, so `jobs` bounds how many points
are in flight rather than adding CPU throughput. Each
point writes its rows to its own temporary CSV; the files are merged in the
listed value order once every point has finished, so the merged table does
not depend on completion order. A failing point is recorded as error rows and
never stops the others.
"""
from __future__ import annotations

import asyncio
import dataclasses
import logging
import tempfile
from dataclasses import dataclass, field
from io import StringIO
from pathlib import Path
from typing import Any

import pandas as pd

from .analyzer import summarize
from .config.loader import ScenarioConfig, build_scenario, set_path
from .constants import DEFAULT_SWEEP_JOBS, MAX_SWEEP_JOBS
from .core.errors import ConfigurationError, EmulatorError
from .engine import run
from .output import SWEEP_COLUMNS, value_cell, write_sweep
from .placement import make_plan, unique_labels

logger = logging.getLogger(__name__)

SEED_PATH = "seed"


@dataclass(slots=True)
class SweepOutcome:
    frame: pd.DataFrame
    failures: list[tuple[Any, str, str]] = field(default_factory=list)
    path: Path | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def point_scenario(base: ScenarioConfig, path: str, value: Any) -> ScenarioConfig:
    """The base scenario with one parameter replaced.

    Sweeping `seed` keeps the document and only changes the run seed.
    """
    if path == SEED_PATH:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigurationError(f"seed sweep values must be integers, got {value!r}")
        return dataclasses.replace(base, seed=value)
    document = set_path(base.document, path, value)
    point = build_scenario(document)
    return dataclasses.replace(point, seed=base.seed)


def _row(value: Any, label: str, summary=None, error: str = "") -> dict:
    row = {"value": value_cell(value), "strategy": label, "error": error}
    for name in ("ttc_us", "transfer_us", "queue_us", "dispatch_us", "compute_us"):
        row[name] = None
    if summary is not None:
        row["ttc_us"] = summary.ttc.ticks
        row["transfer_us"] = summary.transfer.ticks
        row["queue_us"] = summary.queue.ticks
        row["dispatch_us"] = summary.dispatch.ticks
        row["compute_us"] = summary.compute.ticks
    return row


def run_point(base: ScenarioConfig, path: str, value: Any) -> list[dict]:
    """Rows of one sweep value, one per strategy in listed order."""
    labels = unique_labels(base.strategies)
    try:
        scenario = point_scenario(base, path, value)
    except EmulatorError as e:
        logger.warning("sweep %s=%r: %s", path, value, e)
        return [_row(value, label, error=str(e)) for label in labels]

    rows = []
    for label, spec in zip(unique_labels(scenario.strategies), scenario.strategies):
        try:
            plan = make_plan(scenario.workload, scenario.resources, spec)
            result = run(
                scenario.workload, scenario.resources, scenario.links, plan,
                scenario.seed, return_outputs=scenario.return_outputs,
            )
            rows.append(_row(value, label, summarize(result)))
        except EmulatorError as e:
            logger.warning("sweep %s=%r strategy %s: %s", path, value, label, e)
            rows.append(_row(value, label, error=str(e)))
    return rows


def _write_point(rows: list[dict], target: Path) -> Path:
    frame = pd.DataFrame.from_records(rows, columns=SWEEP_COLUMNS)
    for column in ("ttc_us", "transfer_us", "queue_us", "dispatch_us", "compute_us"):
        frame[column] = frame[column].astype("Int64")
    frame.to_csv(target, index=False, lineterminator="\n")
    return target


async def run_sweep_async(
    base: ScenarioConfig,
    path: str,
    values: list[Any],
    workdir: Path,
    jobs: int = DEFAULT_SWEEP_JOBS,
) -> list[Path]:
    """Run every sweep point and return the per-point files in value order."""
    semaphore = asyncio.Semaphore(max(1, min(jobs, MAX_SWEEP_JOBS)))

    async def run_one(index: int, value: Any) -> Path:
        async with semaphore:
            rows = await asyncio.to_thread(run_point, base, path, value)
            return _write_point(rows, workdir / f"point-{index:05d}.csv")

    return list(await asyncio.gather(*[run_one(i, v) for i, v in enumerate(values)]))


def merge_point_files(files: list[Path]) -> str:
    """Concatenate per-point CSVs under a single header."""
    lines: list[str] = []
    for i, file in enumerate(files):
        content = file.read_text(encoding="utf-8").splitlines(keepends=True)
        lines.extend(content if i == 0 else content[1:])
    return "".join(lines)


def run_sweep(
    base: ScenarioConfig,
    out_dir: str | Path | None = None,
    jobs: int = DEFAULT_SWEEP_JOBS,
) -> SweepOutcome:
    """Run the scenario's sweep; write sweep.csv when `out_dir` is given."""
    if not base.sweep:
        raise ConfigurationError("scenario has no sweep section")
    path, values = base.sweep["path"], list(base.sweep["values"])
    logger.info("sweep %s over %d values x %d strategies", path, len(values), len(base.strategies))

    with tempfile.TemporaryDirectory(prefix="continuum-sweep-") as tmp:
        files = asyncio.run(run_sweep_async(base, path, values, Path(tmp), jobs))
        body = merge_point_files(files)

    written = write_sweep(out_dir, body, base.seed, base.digest) if out_dir is not None else None
    frame = pd.read_csv(StringIO(body), keep_default_na=False, na_values=[""])
    failures = [
        (row.value, row.strategy, row.error)
        for row in frame.itertuples(index=False)
        if isinstance(row.error, str) and row.error
    ]
    if failures:
        logger.warning("sweep finished with %d failed points", len(failures))
    return SweepOutcome(frame=frame, failures=failures, path=written)
