"""
Shipped K-Means Calibration and Deployment Defaults
===================================================

This module documents the illustrative calibration used by the bundled
edge-vs-cloud K-Means scenarios. These constants are NOT measurements: the
real broker overheads and VM throughputs behind the original experiment were
never published, so every value below was chosen to reproduce the SHAPE of the
observed behavior with round, explainable numbers.

IMPORTANT: Absolute TTCs depend on these constants. Acceptance checks and
bundled scenarios rely on shape properties (who wins where, how often the
winner flips), not on absolute seconds.


RESOURCES
---------
Edge:  1 core (a single-core, Raspberry-Pi-class VM)
    - 1e8 ops/sec per core
    - 3 ms dispatch delay per task (local middleware)

Cloud: 44 cores (a large cloud VM)
    - 1.2e8 ops/sec per core (20% faster per core than the edge)
    - 2 ms dispatch delay per task
    - K-Means iterations are serial, so only one of the 44 cores is busy;
      the cloud wins on per-core speed, not on parallelism

Edge -> Cloud path (message broker):
    - 70 ms setup overhead per transfer (broker / connection establishment)
    - 2 ms latency
    - 12 MB/s bandwidth (about 100 Mbit/s uplink)
    - serial: one broker pipe


K-MEANS MODEL
-------------
    - K = 8 clusters, T = 10 iterations
    - c = 25 ops per point-cluster per iteration (dimensionality folded in)
    - 16 bytes per point (two float64 coordinates)

Per point, the edge spends c·K·T / 1e8 = 20 µs of compute; the cloud spends
16.7 µs plus 1.33 µs to move the point. The cloud's fixed cost (setup,
latency, dispatch) exceeds the edge's by 62 ms, so:

    crossover N ≈ 62 ms / (20 − 16.7 − 1.33) µs ≈ 31,000 points

Expected shape:
    - N = 32:    edge wins by about 67% (the setup overhead dominates)
    - N ≈ 3.1e4: winner flips from edge to cloud (one sign change)
    - N = 1e6:   cloud wins by about 9.7%


CALIBRATION FROM MEASUREMENTS
-----------------------------
To replace the illustrative throughputs with measured ones, give a resource
`calibration: {"measured_runtime_sec": ...}` instead of `ops_per_sec` in the
scenario document. The loader derives ops_per_sec with calibrate_throughput()
from the scenario's K-Means spec, so the emulated compute time reproduces the
measurement to within one microsecond per iteration.
"""

from ..core.model import Link, LinkConcurrency, Resource, Tier
from ..core.simtime import SimTime
from ..workloads.kmeans import KMeansSpec

EDGE_ID = "edge"
CLOUD_ID = "cloud"

EDGE_CORES = 1
CLOUD_CORES = 44
EDGE_OPS_PER_SEC = 1.0e8
CLOUD_OPS_PER_SEC = 1.2e8
EDGE_DISPATCH_DELAY_SEC = 0.003
CLOUD_DISPATCH_DELAY_SEC = 0.002

BROKER_SETUP_SEC = 0.070
BROKER_LATENCY_SEC = 0.002
BROKER_BANDWIDTH_BYTES_PER_SEC = 1.2e7

KMEANS_CLUSTERS = 8
KMEANS_ITERATIONS = 10
KMEANS_OPS_PER_POINT_CLUSTER = 25.0
KMEANS_BYTES_PER_POINT = 16.0

# Sweep domain of the edge-vs-cloud experiment
SWEEP_POINTS = [32, 100, 1_000, 3_000, 10_000, 30_000, 100_000, 300_000, 1_000_000]
SWEEP_CLUSTERS = [2, 4, 8, 16]


def shipped_resources() -> list[Resource]:
    return [
        Resource(
            id=EDGE_ID,
            tier=Tier.EDGE,
            num_cores=EDGE_CORES,
            ops_per_sec=EDGE_OPS_PER_SEC,
            dispatch_delay=SimTime.from_seconds(EDGE_DISPATCH_DELAY_SEC),
        ),
        Resource(
            id=CLOUD_ID,
            tier=Tier.CLOUD,
            num_cores=CLOUD_CORES,
            ops_per_sec=CLOUD_OPS_PER_SEC,
            dispatch_delay=SimTime.from_seconds(CLOUD_DISPATCH_DELAY_SEC),
        ),
    ]


def shipped_links() -> list[Link]:
    """The broker path in both directions."""
    return [
        Link(
            src=a,
            dst=b,
            bandwidth_bytes_per_sec=BROKER_BANDWIDTH_BYTES_PER_SEC,
            setup_overhead=SimTime.from_seconds(BROKER_SETUP_SEC),
            latency=SimTime.from_seconds(BROKER_LATENCY_SEC),
            concurrency=LinkConcurrency.SERIAL,
        )
        for a, b in ((EDGE_ID, CLOUD_ID), (CLOUD_ID, EDGE_ID))
    ]


def shipped_kmeans_spec(n_points: int, n_clusters: int = KMEANS_CLUSTERS) -> KMeansSpec:
    return KMeansSpec(
        n_points=n_points,
        n_clusters=n_clusters,
        n_iterations=KMEANS_ITERATIONS,
        ops_per_point_cluster=KMEANS_OPS_PER_POINT_CLUSTER,
        bytes_per_point=KMEANS_BYTES_PER_POINT,
        origin=EDGE_ID,
    )


def get_calibration_summary() -> str:
    """Return a human-readable summary of the shipped calibration for debugging."""
    return f"""
    Shipped Calibration Summary
    ===========================

    Edge:  {EDGE_CORES} core  @ {EDGE_OPS_PER_SEC:.3g} ops/s, dispatch {EDGE_DISPATCH_DELAY_SEC * 1e3:g} ms
    Cloud: {CLOUD_CORES} cores @ {CLOUD_OPS_PER_SEC:.3g} ops/s, dispatch {CLOUD_DISPATCH_DELAY_SEC * 1e3:g} ms

    Broker: setup {BROKER_SETUP_SEC * 1e3:g} ms, latency {BROKER_LATENCY_SEC * 1e3:g} ms,
            {BROKER_BANDWIDTH_BYTES_PER_SEC / 1e6:g} MB/s, serial

    K-Means: K={KMEANS_CLUSTERS}, T={KMEANS_ITERATIONS}, c={KMEANS_OPS_PER_POINT_CLUSTER:g},
             {KMEANS_BYTES_PER_POINT:g} bytes/point
    """
