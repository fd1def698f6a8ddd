"""Edge-vs-cloud K-Means behavior under the shipped calibration."""
import pandas as pd
import pytest

from continuum_emu.analyzer import SweepAnalyzer, relative_delta
from continuum_emu.placement import StrategySpec, compare_strategies
from continuum_emu.utils.calibration import (
    SWEEP_CLUSTERS,
    SWEEP_POINTS,
    get_calibration_summary,
    shipped_kmeans_spec,
    shipped_links,
    shipped_resources,
)
from continuum_emu.workloads import kmeans_workload

SPECS = [StrategySpec(kind="edge_centric"), StrategySpec(kind="cloud_centric")]


def compare(n_points, n_clusters=8):
    workload = kmeans_workload(shipped_kmeans_spec(n_points, n_clusters))
    return compare_strategies(workload, shipped_resources(), shipped_links(), SPECS, seed=0)


def ttcs(n_points, n_clusters=8):
    comparison = compare(n_points, n_clusters)
    return comparison.row("edge_centric").summary, comparison.row("cloud_centric").summary


@pytest.mark.parametrize(
    "n_points, edge_us, cloud_us",
    [
        (32, 30_640, 92_583),
        (30_000, 630_000, 632_000),
        (100_000, 2_030_000, 1_892_004),
        (1_000_000, 20_030_000, 18_092_004),
    ],
)
def test_exact_ttcs(n_points, edge_us, cloud_us):
    edge, cloud = ttcs(n_points)
    assert (edge.ttc.ticks, cloud.ttc.ticks) == (edge_us, cloud_us)


def test_edge_wins_small_datasets_by_a_wide_margin():
    edge, cloud = ttcs(32)
    assert 0.30 <= relative_delta(cloud, edge) <= 0.90


def test_cloud_wins_large_datasets_by_a_moderate_margin():
    edge, cloud = ttcs(1_000_000)
    assert 0 < relative_delta(edge, cloud) <= 0.15


def sweep_table():
    rows = []
    for n in SWEEP_POINTS:
        comparison = compare(n)
        for row in comparison.rows:
            rows.append({"value": n, "strategy": row.label, "ttc_us": row.summary.ttc.ticks, "error": ""})
    return pd.DataFrame(rows)


def test_winner_flips_once_near_thirty_thousand_points():
    analyzer = SweepAnalyzer(sweep_table())
    assert analyzer.sign_changes("edge_centric", "cloud_centric") == 1
    assert analyzer.find_crossover("edge_centric", "cloud_centric") == (30_000, 100_000)
    winners = analyzer.winners()
    assert all(winners[n] == "edge_centric" for n in SWEEP_POINTS if n <= 30_000)
    assert all(winners[n] == "cloud_centric" for n in SWEEP_POINTS if n >= 100_000)


def test_ttc_grows_with_cluster_count_in_the_cloud():
    cloud = [ttcs(1_000_000, k)[1].ttc for k in SWEEP_CLUSTERS]
    assert all(a < b for a, b in zip(cloud, cloud[1:]))


def test_calibration_summary_mentions_both_sites():
    text = get_calibration_summary()
    assert "Edge:" in text and "Cloud:" in text and "Broker" in text
