import json

import pytest

from schema import (
    ActivePeriod,
    ArrivalInstance,
    CostBreakdown,
    InfeasibleInstance,
    InstanceFormatError,
    InvalidParams,
    Schedule,
    ScheduleInfeasible,
    SystemParams,
)
from schema.io import (
    instance_from_dict,
    load_problem,
    load_schedule,
    save_instance,
    save_schedule,
    schedule_to_dict,
)


class TestArrivalInstance:
    def test_tasks_are_one_based(self, scenario_two, unit_params):
        assert scenario_two.n_tasks == 3
        assert scenario_two.arrival(1) == 0
        assert scenario_two.arrival(3) == 29
        assert scenario_two.deadline(2, unit_params) == 29

    def test_rejects_decreasing_arrivals(self):
        with pytest.raises(InstanceFormatError):
            ArrivalInstance((0, 5, 3))

    def test_rejects_fractional_arrivals(self):
        with pytest.raises(InstanceFormatError):
            ArrivalInstance((0, 1.5))

    def test_simultaneous_arrivals_allowed(self):
        assert ArrivalInstance((0, 0, 0)).n_tasks == 3

    def test_subinstance_renumbers(self, scenario_two):
        sub = scenario_two.subinstance(2, 3)
        assert sub.arrivals == (19, 29)
        assert sub.arrival(1) == 19


class TestSchedule:
    def test_requires_consecutive_task_ranges(self):
        with pytest.raises(ScheduleInfeasible):
            Schedule((ActivePeriod(9, 10, 1, 1), ActivePeriod(28, 30, 3, 3)))

    def test_requires_strictly_ordered_aps(self):
        with pytest.raises(ScheduleInfeasible):
            Schedule((ActivePeriod(9, 10, 1, 1), ActivePeriod(10, 12, 2, 2)))

    def test_empty_active_period_rejected(self):
        with pytest.raises(ScheduleInfeasible):
            ActivePeriod(5, 5, 1, 1)

    def test_bounds_and_wakeups(self):
        schedule = Schedule((ActivePeriod(9, 10, 1, 1), ActivePeriod(28, 30, 2, 3)))
        assert schedule.bounds() == [[9, 10], [28, 30]]
        assert schedule.n_wakeups == 2
        assert schedule.n_tasks == 3


def test_cost_breakdown_total(unit_params):
    cost = CostBreakdown.from_components(2, 3, 0, unit_params)
    assert cost.total == 23
    assert cost.recompute_total(unit_params) == cost.total
    assert (cost + CostBreakdown.empty()).total == 23


def test_sleep_threshold_is_infinite_without_idle_cost():
    params = SystemParams(beta=1, d=10, c_wake=10.0, c_busy=1.0, c_idle=0.0)
    assert params.sleep_threshold == float("inf")


class TestInstanceDocuments:
    def test_roundtrip_through_files(self, tmp_path, scenario_two, unit_params):
        path = tmp_path / "instance.json"
        save_instance(path, scenario_two, unit_params)
        instance, params = load_problem(path)
        assert instance == scenario_two
        assert params == unit_params

    def test_missing_key(self):
        with pytest.raises(InstanceFormatError):
            instance_from_dict({"arrivals": [0]})

    def test_non_integer_beta(self):
        document = {
            "params": {"beta": "one", "d": 10, "c_wake": 1, "c_busy": 1, "c_idle": 1},
            "arrivals": [0],
        }
        with pytest.raises(InstanceFormatError):
            instance_from_dict(document)

    def test_load_rejects_invalid_params(self, instance_file):
        params = SystemParams(beta=1, d=10, c_wake=10.0, c_busy=1.0, c_idle=2.0)
        with pytest.raises(InvalidParams):
            load_problem(instance_file([0], params))

    def test_load_rejects_overloaded_window(self, instance_file, unit_params):
        with pytest.raises(InfeasibleInstance) as info:
            load_problem(instance_file([0] * 11, unit_params))
        assert info.value.window_start == 0
        assert info.value.count == 11

    def test_load_rejects_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(json.JSONDecodeError):
            load_problem(path)


def test_schedule_document_keeps_integral_times(tmp_path):
    schedule = Schedule((ActivePeriod(9.0, 10.0, 1, 1), ActivePeriod(28, 30.5, 2, 3)))
    document = schedule_to_dict(schedule)
    assert document["aps"][0]["start"] == 9
    assert isinstance(document["aps"][0]["start"], int)
    assert document["aps"][1]["end"] == 30.5

    path = tmp_path / "schedule.json"
    save_schedule(path, schedule)
    assert load_schedule(path) == schedule
