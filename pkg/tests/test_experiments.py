import math

import pytest

from experiments import (
    COMPETE_COLUMNS,
    SWEEP_COLUMNS,
    CompeteConfig,
    ExperimentConfig,
    SweepConfig,
    UnitScale,
    resolve_workers,
    run_compete,
    run_sweep_fig6,
)
from online import PolicyKind
from settings import get_compete_settings, get_sweep_settings


def test_settings_file_holds_both_experiments():
    assert get_sweep_settings()["tick_ms"] == 0.1
    assert get_compete_settings()["c_wake"] == 10


class TestUnitScale:
    def test_ticks(self):
        scale = UnitScale(0.1)
        assert scale.ticks(1) == 10
        assert scale.ticks(20) == 200

    def test_per_tick_cost(self):
        assert UnitScale(0.1).per_tick_cost(30) == pytest.approx(3.0)

    def test_positive_tick(self):
        with pytest.raises(ValueError):
            UnitScale(0)


class TestSweepConfig:
    def test_defaults_from_settings(self):
        config = SweepConfig.from_settings()
        params = config.params_for(28)
        assert (params.beta, params.d) == (10, 200)
        assert params.c_busy == pytest.approx(3.0)
        assert params.c_idle == pytest.approx(0.01)
        assert config.gap_values_ms()[0] == 1 and config.gap_values_ms()[-1] == 100

    def test_costs_are_microjoules(self):
        config = SweepConfig.from_settings()
        params = config.params_for(28)
        # 30 mW for one 1 ms service is 30 uJ; wake-up energies pass through unscaled
        assert params.task_cost == pytest.approx(30.0)
        assert params.c_idle * config.scale.ticks(1) == pytest.approx(0.1)
        assert params.c_wake == 28

    def test_overrides_ignore_none(self):
        config = SweepConfig.from_settings(n_tasks=50, seed=None, gaps_ms=[2, 4])
        assert config.n_tasks == 50
        assert config.seed == 2024
        assert config.gap_values_ms() == [2, 3, 4]

    def test_empty_gap_range(self):
        with pytest.raises(ValueError):
            SweepConfig(gaps_ms=(5, 4))


def test_experiment_config_overrides():
    config = ExperimentConfig.from_settings(
        sweep_overrides={"seed": 99}, compete_overrides={"seed": None}, workers=2
    )
    assert config.sweep.seed == 99
    assert config.compete.seed == CompeteConfig.from_settings().seed
    assert config.workers == 2


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv("ONOFF_THREADS", raising=False)
    assert resolve_workers() == 1
    monkeypatch.setenv("ONOFF_THREADS", "3")
    assert resolve_workers() == 3
    assert resolve_workers(2) == 2
    monkeypatch.setenv("ONOFF_THREADS", "many")
    assert resolve_workers() == 1


def small_sweep(**overrides) -> SweepConfig:
    settings = {"n_tasks": 100, "gaps_ms": [1, 6], "c_wake": [0, 28], "seed": 5}
    settings.update(overrides)
    return SweepConfig.from_settings(**settings)


class TestSweep:
    def test_rows_and_columns(self):
        df = run_sweep_fig6(small_sweep(), workers=1, progress=False)
        assert list(df.columns) == SWEEP_COLUMNS
        assert len(df) == 12
        assert (df["optimal_cost"] <= df["naive_cost"] + 1e-9).all()

    def test_free_wakeups_give_ratio_one(self):
        df = run_sweep_fig6(small_sweep(), workers=1, progress=False)
        free = df[df["c_wake_mJ"] == 0]
        assert free["ratio"].to_list() == pytest.approx([1.0] * len(free))

    def test_reruns_identical(self):
        first = run_sweep_fig6(small_sweep(), workers=1, progress=False)
        second = run_sweep_fig6(small_sweep(), workers=1, progress=False)
        assert first.equals(second)

    def test_parallel_matches_serial(self):
        serial = run_sweep_fig6(small_sweep(), workers=1, progress=False)
        parallel = run_sweep_fig6(small_sweep(), workers=2, progress=False)
        assert serial.equals(parallel)


@pytest.mark.slow
def test_sweep_reproduces_cost_saving_curve():
    config = SweepConfig.from_settings()
    df = run_sweep_fig6(config, progress=False)

    assert (df["ratio"] <= 1 + 1e-9).all()
    assert (df["naive_cost"] > 0).all()
    assert not df.isna().any().any()

    at_one_ms = df[df["max_gap_ms"] == 1]
    assert ((at_one_ms["ratio"] - 1).abs() < 0.02).all()

    curve = df[df["c_wake_mJ"] == 28].set_index("max_gap_ms")["ratio"]
    assert 0.45 <= curve.min() <= 0.60
    assert 1 < curve.idxmin() < 100


class TestCompete:
    def test_deterministic_row(self):
        config = CompeteConfig.from_settings()
        df = run_compete(PolicyKind.DETERMINISTIC, config, progress=False)
        row = df.iloc[0]
        assert list(df.columns) == COMPETE_COLUMNS
        assert row["empirical_ratio"] == pytest.approx(20990 / 11000, abs=1e-9)
        assert row["bound"] == pytest.approx(row["empirical_ratio"], abs=1e-9)
        assert row["theoretical_limit"] == pytest.approx(21 / 11)
        assert row["gamma"] == pytest.approx(0.1)
        assert row["trials"] == 1

    def test_randomized_row(self):
        config = CompeteConfig.from_settings(trials=20)
        row = run_compete(PolicyKind.RANDOMIZED, config, progress=False).iloc[0]
        limit = (0.1 + math.e / (math.e - 1)) / 1.1
        assert abs(row["empirical_ratio"] - limit) < 0.02
        assert row["trials"] == 20

    def test_single_task(self):
        config = CompeteConfig.from_settings(n_tasks=1, trials=3)
        for kind in (PolicyKind.DETERMINISTIC, PolicyKind.RANDOMIZED):
            assert run_compete(kind, config, progress=False).iloc[0]["empirical_ratio"] == 1

    def test_naive_not_supported(self):
        with pytest.raises(ValueError):
            run_compete(PolicyKind.NAIVE, CompeteConfig.from_settings(), progress=False)
