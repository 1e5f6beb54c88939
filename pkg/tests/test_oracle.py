import math

import numpy as np
import pytest

from offline import solve_offline
from online import SleepPolicy, decide_idle_budget
from oracle import (
    PartitionEnumeration,
    brute_force_optimal,
    expected_online_gap_cost,
    latest_feasible_start_grid,
)
from schema import ArrivalInstance, NoFeasibleStart, SystemParams, TooLarge


class TestPartitionEnumeration:
    def test_counts(self):
        assert len(PartitionEnumeration(0)) == 0
        assert len(PartitionEnumeration(1)) == 1
        assert len(PartitionEnumeration(4)) == 8

    def test_groups_of_mask(self):
        enumeration = PartitionEnumeration(4)
        assert enumeration.groups(0) == [(1, 4)]
        assert enumeration.groups(0b101) == [(1, 1), (2, 3), (4, 4)]

    def test_every_split_distinct(self):
        enumeration = PartitionEnumeration(5)
        splits = {tuple(enumeration.groups(mask)) for mask in enumeration}
        assert len(splits) == 16


def test_grid_scan_examples(unit_params, scenario_one):
    assert latest_feasible_start_grid(scenario_one, unit_params, 1, 1) == 9
    params = SystemParams(beta=2, d=10, c_wake=10.0, c_busy=1.0, c_idle=1.0)
    assert latest_feasible_start_grid(ArrivalInstance((0, 1)), params, 1, 2) == 7


def test_grid_scan_without_feasible_start():
    params = SystemParams(beta=2, d=10, c_wake=10.0, c_busy=1.0, c_idle=1.0)
    with pytest.raises(NoFeasibleStart):
        latest_feasible_start_grid(ArrivalInstance((0,) * 6), params, 1, 6)


class TestBruteForce:
    def test_scenarios(self, unit_params, scenario_one, scenario_two):
        schedule, cost = brute_force_optimal(scenario_one, unit_params)
        assert cost.total == pytest.approx(21, abs=1e-9)
        assert schedule.bounds() == [[9, 20]]

        schedule, cost = brute_force_optimal(scenario_two, unit_params)
        assert cost.total == pytest.approx(23, abs=1e-9)
        assert schedule.bounds() == [[9, 10], [28, 30]]

    def test_far_apart_pair(self, unit_params):
        _, cost = brute_force_optimal(ArrivalInstance((0, 25)), unit_params)
        assert cost.total == 22

    def test_size_guard(self, unit_params):
        with pytest.raises(TooLarge):
            brute_force_optimal(ArrivalInstance(tuple(range(0, 210, 10))), unit_params)

    def test_empty(self, unit_params):
        schedule, cost = brute_force_optimal(ArrivalInstance(()), unit_params)
        assert len(schedule) == 0 and cost.total == 0


def test_dynamic_program_matches_brute_force(case_factory):
    for instance, params in case_factory(200, seed=17):
        _, optimum = solve_offline(instance, params)
        _, oracle = brute_force_optimal(instance, params)
        assert optimum.total == pytest.approx(oracle.total, abs=1e-9)


@pytest.mark.slow
def test_dynamic_program_matches_brute_force_thousand_instances(case_factory):
    for instance, params in case_factory(1000, seed=2024):
        _, optimum = solve_offline(instance, params)
        _, oracle = brute_force_optimal(instance, params)
        assert optimum.total == pytest.approx(oracle.total, abs=1e-9)


class TestExpectedGapCost:
    def test_deterministic_pieces(self, unit_params):
        policy = SleepPolicy.deterministic(10)
        assert expected_online_gap_cost(5, policy, unit_params) == 5
        assert expected_online_gap_cost(15, policy, unit_params) == 20

    def test_zero_gap_is_free(self, unit_params):
        assert expected_online_gap_cost(0, SleepPolicy.randomized(1), unit_params) == 0

    def test_randomized_is_uniformly_competitive(self, unit_params):
        factor = math.e / (math.e - 1.0)
        policy = SleepPolicy.randomized(1)
        tau = unit_params.sleep_threshold
        for y in np.linspace(2 * tau / 100, 2 * tau, 100):
            offline = min(unit_params.c_idle * y, unit_params.c_wake)
            ratio = expected_online_gap_cost(y, policy, unit_params) / offline
            assert ratio == pytest.approx(factor, abs=1e-4)

    @pytest.mark.parametrize("y", [2.5, 7.0, 10.0, 25.0])
    def test_randomized_sample_mean_within_three_sigma(self, unit_params, y):
        policy = SleepPolicy.randomized(17)
        budgets = np.array([decide_idle_budget(policy, unit_params, i) for i in range(20_000)])
        # Idle for the budget and pay the next wake-up, unless the gap ends first
        costs = np.where(
            budgets < y,
            unit_params.c_idle * budgets + unit_params.c_wake,
            unit_params.c_idle * y,
        )
        sigma = costs.std(ddof=1) / math.sqrt(len(costs))
        expected = expected_online_gap_cost(y, policy, unit_params)
        assert abs(costs.mean() - expected) <= 3 * sigma

    def test_negative_gap_rejected(self, unit_params):
        with pytest.raises(ValueError):
            expected_online_gap_cost(-1, SleepPolicy.naive(), unit_params)
