import numpy as np
import pytest

from continuum_emu.core import ConfigurationError, Distribution, RngStream, StreamRegistry, sample
from continuum_emu.core.distributions import NORMAL_DRAWS_PER_SAMPLE


def test_degenerate_examples():
    rng = RngStream(1, "test")
    assert sample(Distribution.constant(5.0), rng) == 5.0
    assert sample(Distribution.normal(100, 0), rng) == 100.0
    assert sample(Distribution.uniform(2.5, 2.5), rng) == 2.5


@pytest.mark.parametrize(
    "dist, draws",
    [
        (Distribution.constant(1.0), 1),
        (Distribution.uniform(0, 1), 1),
        (Distribution.normal(0, 1), NORMAL_DRAWS_PER_SAMPLE),
        (Distribution.normal(3, 0), NORMAL_DRAWS_PER_SAMPLE),
    ],
)
def test_draw_consumption_does_not_depend_on_parameters(dist, draws):
    rng = RngStream(7, "draws")
    dist.sample(rng)
    assert rng.draws == draws


@pytest.mark.parametrize(
    "dist",
    [Distribution.normal(100.0, 10.0), Distribution.uniform(10.0, 20.0), Distribution.constant(4.0)],
)
def test_sample_mean_converges(dist):
    rng = RngStream(2024, "mean")
    values = np.array([dist.sample(rng) for _ in range(100_000)])
    assert values.mean() == pytest.approx(dist.mean, rel=0.005)


def test_uniform_stays_in_range():
    rng = RngStream(5, "range")
    dist = Distribution.uniform(-1.0, 3.0)
    values = [dist.sample(rng) for _ in range(10_000)]
    assert min(values) >= -1.0
    assert max(values) < 3.0


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "normal", "mean": 1.0, "stddev": -0.1},
        {"kind": "uniform", "low": 2.0, "high": 1.0},
        {"kind": "constant", "value": -1.0},
        {"kind": "pareto", "value": 1.0},
        {"kind": "normal", "mean": float("nan"), "stddev": 1.0},
    ],
)
def test_invalid_parameters_raise(data):
    with pytest.raises(ConfigurationError):
        Distribution.from_dict(data)


def test_to_dict_matches_from_dict():
    data = {"kind": "normal", "mean": 1.0, "stddev": 0.25}
    assert Distribution.from_dict(data).to_dict() == data


def test_same_seed_and_label_give_same_stream():
    a, b = RngStream(42, "resource.edge.perf"), RngStream(42, "resource.edge.perf")
    assert [a.uniform01() for _ in range(5)] == [b.uniform01() for _ in range(5)]


def test_labels_and_seeds_separate_streams():
    base = [RngStream(42, "workload.ops").uniform01() for _ in range(1)]
    other_label = [RngStream(42, "resource.edge.perf").uniform01() for _ in range(1)]
    other_seed = [RngStream(43, "workload.ops").uniform01() for _ in range(1)]
    assert base != other_label
    assert base != other_seed


def test_streams_are_independent_of_each_other():
    registry = StreamRegistry(9)
    registry.stream("resource.cloud.perf").uniform01()
    registry.stream("resource.cloud.perf").uniform01()
    first_edge = registry.stream("resource.edge.perf").uniform01()
    assert first_edge == RngStream(9, "resource.edge.perf").uniform01()
    assert registry.stream("resource.cloud.perf").draws == 2
