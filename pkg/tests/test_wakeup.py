import numpy as np
import pytest

from oracle import latest_feasible_start_grid
from schema import ArrivalAfterWake, ArrivalInstance, SystemParams
from wakeup import critical_offset, online_wakeup_update, optimal_ap_start, start_wakeup


class TestOptimalApStart:
    def test_lone_task_starts_at_deadline_minus_beta(self, unit_params):
        assert optimal_ap_start(ArrivalInstance((0,)), unit_params, 1) == 9

    def test_second_group_of_scenario_two(self, unit_params, scenario_two):
        assert optimal_ap_start(scenario_two, unit_params, 2) == 28

    def test_crowded_window_moves_start_earlier(self):
        params = SystemParams(beta=2, d=10, c_wake=10.0, c_busy=1.0, c_idle=1.0)
        instance = ArrivalInstance((0, 1))
        assert optimal_ap_start(instance, params, 1) == 7
        assert critical_offset(instance, params, 1) == (2, 1)

    def test_arrivals_after_window_ignored(self, unit_params):
        # Task 2 arrives at d_1 - beta and only joins the backlog
        instance = ArrivalInstance((0, 9))
        assert optimal_ap_start(instance, unit_params, 1) == 9

    def test_smallest_maximizer_reported(self):
        params = SystemParams(beta=2, d=20, c_wake=10.0, c_busy=1.0, c_idle=1.0)
        instance = ArrivalInstance((0, 1, 3))
        # delta_2 = 2 - 1 = 1, delta_3 = 4 - 3 = 1
        assert critical_offset(instance, params, 1) == (2, 1)

    def test_start_never_before_first_arrival(self):
        params = SystemParams(beta=1, d=10, c_wake=1.0, c_busy=1.0, c_idle=1.0)
        instance = ArrivalInstance((5,) * 10)
        assert optimal_ap_start(instance, params, 1) == 5


def test_closed_form_matches_grid_scan_on_random_groups(case_factory):
    rng = np.random.default_rng(3)
    for instance, params in case_factory(10_000, seed=3):
        first = int(rng.integers(1, instance.n_tasks, endpoint=True))
        last = int(rng.integers(first, instance.n_tasks, endpoint=True))
        assert optimal_ap_start(instance, params, first, last) == latest_feasible_start_grid(
            instance, params, first, last
        )


class TestOnlineWakeup:
    def test_initial_wake_is_latest_possible(self, unit_params):
        state = start_wakeup(1, 0, unit_params)
        assert state.scheduled_wake == 9
        assert state.window_end(unit_params) == 9

    def test_update_moves_wake_earlier(self):
        params = SystemParams(beta=2, d=10, c_wake=10.0, c_busy=1.0, c_idle=1.0)
        state = start_wakeup(1, 0, params)
        assert state.scheduled_wake == 8
        state = online_wakeup_update(state, 1, params)
        assert state.scheduled_wake == 7
        assert state.observed == 2

    def test_late_arrival_rejected(self, unit_params):
        state = start_wakeup(1, 0, unit_params)
        with pytest.raises(ArrivalAfterWake):
            online_wakeup_update(state, 9, unit_params)

    def test_incremental_matches_offline_prefix(self, case_factory):
        for instance, params in case_factory(500, seed=11):
            state = start_wakeup(1, instance.arrival(1), params)
            for task in range(2, instance.n_tasks + 1):
                if instance.arrival(task) >= state.scheduled_wake:
                    break
                previous = state.scheduled_wake
                state = online_wakeup_update(state, instance.arrival(task), params)
                assert state.scheduled_wake <= previous
                assert state.scheduled_wake == optimal_ap_start(instance, params, 1, task)
            assert state.scheduled_wake == optimal_ap_start(instance, params, 1)
