import copy
import json

import pytest

from continuum_emu.core import Link, Resource, SimTime, Task, Tier, Workload
from continuum_emu.placement import PlacementPlan


def seconds(value):
    return SimTime.from_seconds(value)


def single_resource(num_cores=1, ops_per_sec=1e6, dispatch=0.0, rid="edge", tier=Tier.EDGE, perf_dist=None):
    return Resource(
        id=rid,
        tier=tier,
        num_cores=num_cores,
        ops_per_sec=ops_per_sec,
        perf_dist=perf_dist,
        dispatch_delay=seconds(dispatch),
    )


def task_list(ops, origin="edge", **kwargs):
    return [Task(id=i, num_ops=o, origin=origin, sequence_index=i, **kwargs) for i, o in enumerate(ops)]


def all_on(workload: Workload, resource_id: str, label="test") -> PlacementPlan:
    return PlacementPlan(assignment={t.id: resource_id for t in workload.tasks}, label=label)


def edge_cloud_links(setup=0.07, latency=0.002, bandwidth=1.2e7):
    return [
        Link(src=a, dst=b, bandwidth_bytes_per_sec=bandwidth, setup_overhead=seconds(setup), latency=seconds(latency))
        for a, b in (("edge", "cloud"), ("cloud", "edge"))
    ]


MINIMAL_DOC = {
    "seed": 1,
    "resources": [
        {"id": "edge", "tier": "edge", "num_cores": 1, "ops_per_sec": 1.0e9},
    ],
    "workload": {"tasks": [{"id": 0, "num_ops": 1.0e9, "origin": "edge"}]},
    "strategies": [{"kind": "edge_centric"}],
}

EDGE_CLOUD_DOC = {
    "seed": 3,
    "resources": [
        {"id": "edge", "tier": "edge", "num_cores": 1, "ops_per_sec": 1.0e8, "dispatch_delay_sec": 0.003},
        {"id": "cloud", "tier": "cloud", "num_cores": 44, "ops_per_sec": 1.2e8, "dispatch_delay_sec": 0.002},
    ],
    "links": [
        {"src": "edge", "dst": "cloud", "setup_overhead_sec": 0.07, "latency_sec": 0.002,
         "bandwidth_bytes_per_sec": 1.2e7},
        {"src": "cloud", "dst": "edge", "setup_overhead_sec": 0.07, "latency_sec": 0.002,
         "bandwidth_bytes_per_sec": 1.2e7},
    ],
    "workload": {
        "kmeans": {
            "n_points": 1000,
            "n_clusters": 8,
            "n_iterations": 10,
            "ops_per_point_cluster": 25.0,
            "bytes_per_point": 16.0,
        }
    },
    "strategies": [{"kind": "edge_centric"}, {"kind": "cloud_centric"}],
}


@pytest.fixture
def minimal_doc():
    return copy.deepcopy(MINIMAL_DOC)


@pytest.fixture
def edge_cloud_doc():
    return copy.deepcopy(EDGE_CLOUD_DOC)


@pytest.fixture
def write_doc(tmp_path):
    def write(document, name="scenario.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document, indent=2), encoding="utf-8")
        return path

    return write


@pytest.fixture(autouse=True)
def _no_seed_env(monkeypatch):
    monkeypatch.delenv("CONTINUUM_EMU_SEED", raising=False)
