"""Centralized defaults for consistent emulation behavior across modules."""

# Sampling floors
DEFAULT_OPS_FLOOR = 1.0                       # ops per task after ops_dist sampling
DEFAULT_THROUGHPUT_FLOOR_FRACTION = 1e-6      # fraction of nominal ops_per_sec

# Stage compute multipliers (o, +, ++, +++ marks made quantitative)
# Each bucket is 5x the previous one; illustrative, fully overridable.
STAGE_OPS_MULTIPLIERS = {
    "pre_processing": 1.0,
    "analytics": 5.0,
    "inference": 25.0,
    "training": 125.0,
    "generic": 1.0,
}

# Fraction of raw input bytes leaving each stage
STAGE_BYTES_OUT_RATIOS = {
    "pre_processing": 0.1,     # compression / aggregation on the edge
    "analytics": 0.05,
    "inference": 0.01,         # results are small
    "training": 0.001,         # model updates
    "generic": 1.0,
}

# Memory and I/O marks, carried as annotations only
STAGE_MEMORY_MARKS = {
    "pre_processing": "+",
    "analytics": "+",
    "inference": "++",
    "training": "+++",
    "generic": "o",
}

STAGE_IO_MARKS = {
    "pre_processing": "++",
    "analytics": "+",
    "inference": "+",
    "training": "+",
    "generic": "o",
}

# Output file names and schema
SUMMARY_FILE = "summary.json"
TRACE_FILE = "trace.csv"
SWEEP_FILE = "sweep.csv"
CSV_SCHEMA_VERSION = 1
DEFAULT_OUTPUT_DIR = "out"

# Environment
SEED_ENV_VAR = "CONTINUUM_EMU_SEED"

# CLI exit codes
EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_RUN = 3
EXIT_SWEEP_PARTIAL = 4

# Sweep worker cap
DEFAULT_SWEEP_JOBS = 1
MAX_SWEEP_JOBS = 32
