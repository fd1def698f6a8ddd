import pytest

from continuum_emu.core import ComputationError, SimTime, duration_for
from continuum_emu.core.simtime import MAX_TICKS, ceil_micros


@pytest.mark.parametrize(
    "ops, throughput, expected_us",
    [
        (1e9, 1e9, 1_000_000),
        (1, 1e9, 1),
        (3.3e8, 2e8, 1_650_000),
    ],
)
def test_duration_for_examples(ops, throughput, expected_us):
    assert duration_for(ops, throughput) == SimTime(expected_us)


def test_duration_is_at_least_one_tick():
    assert duration_for(1e-3, 1e12).ticks == 1


@pytest.mark.parametrize("ops, throughput", [(float("nan"), 1.0), (1.0, float("inf")), (0.0, 1.0), (1.0, 0.0)])
def test_duration_rejects_bad_inputs(ops, throughput):
    with pytest.raises(ComputationError):
        duration_for(ops, throughput)


def test_from_seconds_lands_on_exact_microseconds():
    assert SimTime.from_seconds(0.003).ticks == 3000
    assert SimTime.from_seconds(1.65).ticks == 1_650_000
    assert SimTime.from_seconds("2.05").ticks == 2_050_000
    # half-even at the microsecond
    assert SimTime.from_seconds("0.0000005").ticks == 0
    assert SimTime.from_seconds("0.0000015").ticks == 2


def test_arithmetic_and_ordering():
    a, b = SimTime(5), SimTime(3)
    assert a + b == SimTime(8)
    assert a - b == SimTime(2)
    assert b * 3 == SimTime(9)
    assert b < a
    assert not SimTime(0)
    assert str(SimTime(1_650_000)) == "1.650000s"


def test_negative_and_overflow_raise():
    with pytest.raises(ComputationError):
        SimTime(3) - SimTime(5)
    with pytest.raises(ComputationError):
        SimTime(MAX_TICKS) + SimTime(1)
    with pytest.raises(ComputationError):
        SimTime(-1)


def test_ceil_micros_is_exact_on_float_values():
    # 512 bytes at 12 MB/s is 42.67 us
    assert ceil_micros(512, 1.2e7) == 43
    assert ceil_micros(0, 1.0) == 0
