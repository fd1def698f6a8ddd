import pytest

from continuum_emu.analyzer import linear_fit
from continuum_emu.core import ConfigurationError, DependencyMode, Distribution, OpsMode, RngStream, SimTime, Stage
from continuum_emu.engine import run
from continuum_emu.utils.stages import stage_annotations
from continuum_emu.workloads import (
    KMeansSpec,
    StageProfile,
    calibrate_throughput,
    ensemble_workload,
    kmeans_workload,
    pipeline_workload,
)

from conftest import all_on, single_resource


class TestKMeans:
    def test_one_task_per_iteration(self):
        workload = kmeans_workload(KMeansSpec(n_points=1000, n_clusters=2, n_iterations=3))
        assert len(workload) == 3
        assert [t.num_ops for t in workload.ordered()] == [2000.0] * 3
        assert workload.dependency_mode is DependencyMode.SEQUENTIAL
        assert all(t.stage is Stage.TRAINING for t in workload.tasks)

    def test_dataset_moves_with_the_first_iteration_only(self):
        workload = kmeans_workload(KMeansSpec(n_points=1000, n_clusters=2, n_iterations=3, bytes_per_point=16))
        assert [t.input_bytes for t in workload.ordered()] == [16_000, 0, 0]

    def test_doubling_clusters_doubles_compute(self):
        resource = single_resource(ops_per_sec=1e8)
        ttcs = []
        for k in (4, 8):
            workload = kmeans_workload(KMeansSpec(n_points=100_000, n_clusters=k, n_iterations=5))
            ttcs.append(run(workload, [resource], [], all_on(workload, "edge"), seed=0).ttc)
        assert ttcs[1] == ttcs[0] * 2

    @pytest.mark.parametrize("field", ["n_points", "n_clusters", "n_iterations"])
    def test_non_positive_sizes_are_rejected(self, field):
        values = {"n_points": 10, "n_clusters": 2, "n_iterations": 2, field: 0}
        with pytest.raises(ConfigurationError):
            KMeansSpec(**values)

    @pytest.mark.parametrize(
        "swept, values",
        [
            ("n_points", [10_000, 20_000, 40_000, 80_000, 160_000]),
            ("n_clusters", [2, 4, 6, 8, 10]),
            ("n_iterations", [2, 4, 6, 8, 10]),
        ],
    )
    def test_ttc_is_linear_in_each_factor(self, swept, values):
        resource = single_resource(ops_per_sec=1.2e8, dispatch=0.002)
        base = {"n_points": 50_000, "n_clusters": 8, "n_iterations": 10, "ops_per_point_cluster": 25.0}
        ttcs = []
        for value in values:
            spec = KMeansSpec(**{**base, swept: value})
            workload = kmeans_workload(spec)
            ttcs.append(run(workload, [resource], [], all_on(workload, "edge"), seed=0).ttc.ticks)
        fit = linear_fit(values, ttcs)
        assert fit["r_squared"] > 0.999
        assert fit["slope"] > 0


class TestCalibration:
    def test_algebraic_inverse(self):
        spec = KMeansSpec(n_points=1000, n_clusters=2, n_iterations=5)
        assert calibrate_throughput(0.01, spec) == pytest.approx(1e6)

    def test_round_trip_reproduces_the_measurement(self):
        spec = KMeansSpec(n_points=1000, n_clusters=2, n_iterations=5)
        resource = single_resource(ops_per_sec=calibrate_throughput(0.01, spec))
        workload = kmeans_workload(spec)
        ttc = run(workload, [resource], [], all_on(workload, "edge"), seed=0).ttc
        assert abs(ttc.ticks - SimTime.from_seconds(0.01).ticks) <= 5

    def test_runtime_ratio_gives_inverse_throughput_ratio(self):
        spec = KMeansSpec(n_points=5000, n_clusters=4, n_iterations=7, ops_per_point_cluster=3.0)
        assert calibrate_throughput(1.0, spec) == pytest.approx(2 * calibrate_throughput(2.0, spec))

    @pytest.mark.parametrize("runtime", [0.0, -1.0, float("inf")])
    def test_non_positive_runtime_is_rejected(self, runtime):
        with pytest.raises(ConfigurationError):
            calibrate_throughput(runtime, KMeansSpec(n_points=10, n_clusters=2, n_iterations=2))


class TestPipeline:
    def test_identity_pipeline(self):
        profile = StageProfile(stage=Stage.GENERIC, ops_multiplier=1.0)
        workload = pipeline_workload([profile], raw_ops=123.0, raw_bytes=1000, tasks_per_stage=1)
        (task,) = workload.tasks
        assert task.num_ops == 123.0
        assert task.input_bytes == 1000

    def test_bytes_flow_between_stages(self):
        stages = [
            StageProfile(stage="pre_processing", ops_multiplier=1.0, bytes_in_ratio=1.0, bytes_out_ratio=0.1),
            StageProfile.default("analytics"),
        ]
        workload = pipeline_workload(stages, raw_ops=1e6, raw_bytes=1_000_000, tasks_per_stage=1)
        analytics = [t for t in workload.tasks if t.stage is Stage.ANALYTICS]
        assert [t.input_bytes for t in analytics] == [100_000]

    def test_bytes_and_ops_are_conserved_across_tasks(self):
        stages = [StageProfile.default(s) for s in ("pre_processing", "analytics", "inference")]
        workload = pipeline_workload(stages, raw_ops=1e7, raw_bytes=1_000_003, tasks_per_stage=4)
        assert workload.dependency_mode is DependencyMode.STAGED
        for index, profile in enumerate(stages):
            stage_tasks = [t for t in workload.tasks if t.stage_index == index]
            assert len(stage_tasks) == 4
            assert sum(t.num_ops for t in stage_tasks) == pytest.approx(1e7 * profile.ops_multiplier)
            assert sum(t.output_bytes for t in stage_tasks) == round(1_000_003 * profile.bytes_out_ratio)
        assert sum(t.input_bytes for t in workload.tasks if t.stage_index == 0) == 1_000_003

    def test_stages_wait_for_the_previous_stage(self):
        stages = [StageProfile.default("pre_processing"), StageProfile.default("training")]
        workload = pipeline_workload(stages, raw_ops=1e6, raw_bytes=100, tasks_per_stage=3)
        preds = workload.predecessors()
        assert all(preds[t.id] == set() for t in workload.tasks if t.stage_index == 0)
        assert all(preds[t.id] == {0, 1, 2} for t in workload.tasks if t.stage_index == 1)

    def test_profiles_carry_annotations(self):
        profile = StageProfile.from_dict({"stage": "training", "ops_multiplier": 10})
        assert profile.annotations == stage_annotations(Stage.TRAINING)
        assert profile.annotations["memory"] == "+++"
        assert StageProfile.from_dict("Pre-Processing").stage is Stage.PRE_PROCESSING

    def test_invalid_profile(self):
        with pytest.raises(ConfigurationError):
            StageProfile(stage="analytics", ops_multiplier=0.0)


class TestEnsemble:
    def test_homogeneous(self):
        workload = ensemble_workload(5, 1e6, "edge")
        assert len(workload) == 5
        assert workload.dependency_mode is DependencyMode.INDEPENDENT
        assert workload.sampled_ops(RngStream(0, "workload.ops")) == {i: 1e6 for i in range(5)}

    def test_heterogeneous_absolute_sizes(self):
        workload = ensemble_workload(
            200, 1.0, "edge", ops_dist=Distribution.uniform(1e5, 2e5), mode=OpsMode.ABSOLUTE
        )
        ops = workload.sampled_ops(RngStream(3, "workload.ops"))
        assert all(1e5 <= value < 2e5 for value in ops.values())
        assert len(set(ops.values())) > 1

    def test_ops_floor_applies(self):
        workload = ensemble_workload(50, 10.0, "edge", ops_dist=Distribution.normal(0.0, 1.0))
        ops = workload.sampled_ops(RngStream(3, "workload.ops"))
        assert min(ops.values()) >= 1.0

    def test_needs_at_least_one_task(self):
        with pytest.raises(ConfigurationError):
            ensemble_workload(0, 1e6, "edge")
