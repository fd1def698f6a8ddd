import numpy as np
import pandas as pd
import pytest

from continuum_emu.analyzer import Summary, SweepAnalyzer, linear_fit, relative_delta, summarize
from continuum_emu.core import (
    AnalysisError,
    DependencyMode,
    Distribution,
    OpsVariability,
    SimTime,
    Task,
    Tier,
    Workload,
)
from continuum_emu.engine import run
from continuum_emu.placement import StrategySpec, make_plan
from continuum_emu.utils.calibration import shipped_kmeans_spec, shipped_links, shipped_resources
from continuum_emu.workloads import kmeans_workload

from conftest import all_on, edge_cloud_links, seconds, single_resource, task_list


def summary_with_ttc(value_s):
    zero = SimTime(0)
    return Summary(ttc=seconds(value_s), transfer=zero, queue=zero, dispatch=zero, compute=zero)


def test_single_task_summary():
    workload = Workload(task_list([5e6]))
    summary = summarize(run(workload, [single_resource()], [], all_on(workload, "edge"), seed=0))
    assert summary.ttc == seconds(5)
    assert summary.compute == seconds(5)
    assert summary.transfer == summary.queue == summary.dispatch == SimTime(0)
    assert summary.utilization == {"edge": 1.0}
    assert summary.num_tasks == 1


def test_wave_utilization():
    workload = Workload(task_list([5e6] * 10))
    summary = summarize(run(workload, [single_resource(num_cores=4)], [], all_on(workload, "edge"), seed=0))
    assert summary.ttc == seconds(15)
    assert summary.utilization["edge"] == pytest.approx(50 / 60)


def test_idle_resource_has_zero_utilization():
    resources = [single_resource(), single_resource(rid="cloud", tier=Tier.CLOUD)]
    workload = Workload(task_list([1e6]))
    summary = summarize(run(workload, resources, [], all_on(workload, "edge"), seed=0))
    assert summary.utilization == {"edge": 1.0, "cloud": 0.0}


def test_small_kmeans_in_the_cloud_is_transfer_bound():
    workload = kmeans_workload(shipped_kmeans_spec(32))
    resources = shipped_resources()
    plan = make_plan(workload, resources, StrategySpec(kind="cloud_centric"))
    summary = summarize(run(workload, resources, shipped_links(), plan, seed=0))
    assert summary.transfer > summary.compute
    assert summary.ttc.ticks == 92_583


def test_stage_spans_and_dict_form():
    workload = kmeans_workload(shipped_kmeans_spec(32))
    resources = shipped_resources()
    plan = make_plan(workload, resources, StrategySpec(kind="edge_centric"))
    summary = summarize(run(workload, resources, shipped_links(), plan, seed=0))
    document = summary.to_dict()
    assert document["ttc_us"] == 30_640
    assert document["stage_spans_us"] == {"training": 30_640}
    assert document["phases_us"]["dispatch"] == 30_000
    assert set(document["utilization"]) == {"cloud", "edge"}


def test_incomplete_trace_is_rejected():
    workload = Workload(task_list([1e6]))
    result = run(workload, [single_resource()], [], all_on(workload, "edge"), seed=0)
    result.trace.records[0].exec_end = None
    with pytest.raises(AnalysisError):
        summarize(result)


@pytest.mark.parametrize("a, b, expected", [(1, 1, 0.0), (2, 1, 0.5), (1, 2, -0.5), (0, 0, 0.0)])
def test_relative_delta(a, b, expected):
    assert relative_delta(summary_with_ttc(a), summary_with_ttc(b)) == pytest.approx(expected)


def test_linear_fit_recovers_a_line():
    fit = linear_fit([1, 2, 3, 4], [3, 5, 7, 9])
    assert fit["slope"] == pytest.approx(2.0)
    assert fit["intercept"] == pytest.approx(1.0)
    assert fit["r_squared"] == pytest.approx(1.0)
    with pytest.raises(AnalysisError):
        linear_fit([1], [1])


def sweep_frame():
    rows = []
    for value, edge, cloud in [(10, 1, 5), (20, 2, 5), (30, 6, 5), (40, 8, 5)]:
        rows.append({"value": value, "strategy": "edge", "ttc_us": edge, "error": ""})
        rows.append({"value": value, "strategy": "cloud", "ttc_us": cloud, "error": ""})
    rows.append({"value": 50, "strategy": "edge", "ttc_us": None, "error": "boom"})
    return pd.DataFrame(rows)


def test_sweep_analyzer():
    analyzer = SweepAnalyzer(sweep_frame())
    table = analyzer.ttc_table()
    assert list(table.columns) == ["edge", "cloud"]
    assert list(table.index) == [10, 20, 30, 40]
    assert list(analyzer.winners()) == ["edge", "edge", "cloud", "cloud"]
    assert analyzer.sign_changes("edge", "cloud") == 1
    assert analyzer.find_crossover("edge", "cloud") == (20, 30)
    assert analyzer.deltas("edge", "cloud").iloc[0] == pytest.approx(-0.8)
    assert analyzer.fit("cloud")["slope"] == pytest.approx(0.0)


def test_sweep_analyzer_without_crossover():
    frame = sweep_frame()
    frame = frame[frame["value"] <= 20]
    assert SweepAnalyzer(frame).find_crossover("edge", "cloud") is None


def test_sweep_analyzer_rejects_unknown_strategy():
    with pytest.raises(AnalysisError):
        SweepAnalyzer(sweep_frame()).deltas("edge", "fog")


@pytest.mark.parametrize("seed", range(6))
def test_phases_add_up_to_ttc_on_one_sequential_core(seed):
    rng = np.random.default_rng(seed)
    n_tasks = int(rng.integers(1, 15))
    tasks = [
        Task(
            id=i,
            num_ops=float(rng.integers(1, 3_000_000)),
            origin="edge",
            input_bytes=int(rng.integers(0, 1_000_000)),
            sequence_index=i,
        )
        for i in range(n_tasks)
    ]
    workload = Workload(
        tasks,
        dependency_mode=DependencyMode.SEQUENTIAL,
        ops_variability=OpsVariability(Distribution.normal(1.0, 0.3)),
    )
    site = "cloud" if seed % 2 else "edge"
    resources = [
        single_resource(dispatch=0.002),
        single_resource(rid="cloud", tier=Tier.CLOUD, dispatch=0.001, perf_dist=Distribution.uniform(0.8, 1.2)),
    ]
    result = run(workload, resources, edge_cloud_links(), all_on(workload, site), seed=seed)
    summary = summarize(result)
    assert summary.transfer + summary.queue + summary.dispatch + summary.compute == summary.ttc
