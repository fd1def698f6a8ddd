"""Stage classification utilities.

Provides the edge affinity of processing stages and the qualitative memory /
I/O marks carried as annotations on stage profiles. The marks never constrain
scheduling.
"""
from ..constants import STAGE_IO_MARKS, STAGE_MEMORY_MARKS
from ..core.model import Stage

# Stages that typically run close to the sensors
EDGE_AFFINE_STAGES = frozenset({Stage.PRE_PROCESSING, Stage.INFERENCE})


def parse_stage(value: str | Stage) -> Stage:
    """Accept a Stage or its name, tolerating dashes and case ("Pre-Processing")."""
    if isinstance(value, Stage):
        return value
    return Stage(str(value).strip().lower().replace("-", "_"))


def stage_annotations(stage: Stage) -> dict[str, str]:
    """Memory and I/O marks for a stage."""
    return {
        "memory": STAGE_MEMORY_MARKS[stage.value],
        "io": STAGE_IO_MARKS[stage.value],
    }


def is_edge_affine(stage: Stage) -> bool:
    """Check whether a stage is usually placed on the edge in hybrid deployments.

    Used to build the default stage map for hybrid_stage strategies.
    """
    return stage in EDGE_AFFINE_STAGES
