"""Command-line entry point: run, sweep and validate scenario documents.

Exit codes:
    0  success
    2  schema or configuration error (validate: also plan errors)
    3  plan or run error
    4  at least one sweep point failed (sweep.csv is still written)
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .analyzer import SweepAnalyzer
from .config import SCENARIO_SCHEMA, load_scenario
from .constants import (
    DEFAULT_SWEEP_JOBS,
    EXIT_OK,
    EXIT_RUN,
    EXIT_SCHEMA,
    EXIT_SWEEP_PARTIAL,
)
from .core.errors import AnalysisError, ConfigurationError, EmulatorError, PlanError
from .engine import validate_plan
from .output import write_summary, write_trace
from .placement import compare_strategies, make_plan, unique_labels
from .sweep import run_sweep
from .utils.calibration import get_calibration_summary

logger = logging.getLogger("continuum_emu")


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _load(args):
    return load_scenario(args.config, overrides=getattr(args, "overrides", None), cli_seed=getattr(args, "seed", None))


def cmd_run(args) -> int:
    try:
        scenario = _load(args)
    except ConfigurationError as e:
        logger.error("%s", e)
        return EXIT_SCHEMA

    try:
        comparison = compare_strategies(
            scenario.workload,
            scenario.resources,
            scenario.links,
            scenario.strategies,
            scenario.seed,
            return_outputs=scenario.return_outputs,
        )
    except EmulatorError as e:
        logger.error("%s", e)
        return EXIT_RUN

    out_dir = Path(args.out or scenario.output_dir)
    write_summary(out_dir, comparison, scenario.digest, include_wall_clock=args.wall_clock)
    write_trace(out_dir, comparison, scenario.digest)

    print(f"config_digest: {scenario.digest}")
    print(f"seed: {scenario.seed}")
    print(comparison.to_frame().to_string(index=False))
    print(f"best: {comparison.best.label}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        scenario = _load(args)
        if not scenario.sweep:
            raise ConfigurationError("scenario has no sweep section")
    except ConfigurationError as e:
        logger.error("%s", e)
        return EXIT_SCHEMA

    outcome = run_sweep(scenario, out_dir=Path(args.out or scenario.output_dir), jobs=args.jobs)

    print(f"config_digest: {scenario.digest}")
    try:
        print(SweepAnalyzer(outcome.frame).ttc_table().to_string())
    except AnalysisError:
        print("no successful sweep points")
    if not outcome.ok:
        for value, label, error in outcome.failures:
            logger.error("sweep point %s / %s failed: %s", value, label, error)
        return EXIT_SWEEP_PARTIAL
    return EXIT_OK


def cmd_validate(args) -> int:
    if args.print_schema:
        print(json.dumps(SCENARIO_SCHEMA, indent=2))
        return EXIT_OK
    if args.show_calibration:
        print(get_calibration_summary())
        if args.config is None:
            return EXIT_OK
    if args.config is None:
        logger.error("validate needs a config path")
        return EXIT_SCHEMA

    try:
        scenario = _load(args)
        for label, spec in zip(unique_labels(scenario.strategies), scenario.strategies):
            plan = make_plan(scenario.workload, scenario.resources, spec)
            try:
                validate_plan(scenario.workload, scenario.resources, scenario.links, plan)
            except PlanError as e:
                raise PlanError(f"strategy {label}: {e}") from e
    except (ConfigurationError, PlanError) as e:
        logger.error("%s", e)
        return EXIT_SCHEMA

    print(json.dumps(scenario.document, indent=2, sort_keys=True))
    print(f"config_digest: {scenario.digest}")
    return EXIT_OK


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="continuum-emu",
        description="Deterministic edge-to-cloud task placement emulator.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("config", type=Path)
        p.add_argument("--seed", type=int)
        p.add_argument("--out", type=Path)
        p.add_argument(
            "--set", dest="overrides", action="append", default=[], metavar="PATH=VALUE",
            help="override a config field, e.g. workload.kmeans.n_points=1000",
        )

    run_parser = sub.add_parser("run", help="run every strategy and compare TTCs")
    scenario_options(run_parser)
    run_parser.add_argument("--wall-clock", action="store_true", help="record generation time in summary.json")
    run_parser.set_defaults(handler=cmd_run)

    sweep_parser = sub.add_parser("sweep", help="run the scenario's parameter sweep")
    scenario_options(sweep_parser)
    sweep_parser.add_argument(
        "--jobs", type=int, default=DEFAULT_SWEEP_JOBS,
        help="sweep points in flight at once (threads share the GIL, so this does not add CPU throughput)",
    )
    sweep_parser.set_defaults(handler=cmd_sweep)

    validate_parser = sub.add_parser("validate", help="check schema and plans without simulating")
    validate_parser.add_argument("config", type=Path, nargs="?")
    validate_parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="PATH=VALUE")
    validate_parser.add_argument("--print-schema", action="store_true")
    validate_parser.add_argument("--show-calibration", action="store_true")
    validate_parser.set_defaults(handler=cmd_validate)

    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    _configure_logging(args.verbose)
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
