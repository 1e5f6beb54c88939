"""
JSON codec for instances, schedules and cost summaries.

Task indices are 1-based in every serialized form. Instances that violate the
per-window arrival bound are rejected when loaded, not scheduled best-effort.
"""

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Union

from .costs import CostBreakdown
from .errors import InstanceFormatError
from .instance import ArrivalInstance
from .params import SystemParams
from .schedule import ActivePeriod, Schedule

logger = logging.getLogger(__name__)


@dataclass
class InstanceKeys:
    """Key names of the instance JSON document."""

    params: str = "params"
    arrivals: str = "arrivals"
    beta: str = "beta"
    d: str = "d"
    c_wake: str = "c_wake"
    c_busy: str = "c_busy"
    c_idle: str = "c_idle"


@dataclass
class ScheduleKeys:
    """Key names of the schedule JSON document."""

    aps: str = "aps"
    start: str = "start"
    end: str = "end"
    first_task: str = "first_task"
    last_task: str = "last_task"


# Aliases for cleaner code and reduced verbosity
IK = InstanceKeys
SK = ScheduleKeys


def params_to_dict(params: SystemParams) -> dict:
    return {
        IK.beta: params.beta,
        IK.d: params.d,
        IK.c_wake: params.c_wake,
        IK.c_busy: params.c_busy,
        IK.c_idle: params.c_idle,
    }


def params_from_dict(data: dict) -> SystemParams:
    try:
        return SystemParams(
            beta=_as_int(data[IK.beta], IK.beta),
            d=_as_int(data[IK.d], IK.d),
            c_wake=float(data[IK.c_wake]),
            c_busy=float(data[IK.c_busy]),
            c_idle=float(data[IK.c_idle]),
        )
    except KeyError as e:
        raise InstanceFormatError(f"Missing parameter {e.args[0]!r}") from e
    except (TypeError, ValueError) as e:
        raise InstanceFormatError(f"Malformed parameters: {e}") from e


def instance_to_dict(instance: ArrivalInstance, params: SystemParams) -> dict:
    return {IK.params: params_to_dict(params), IK.arrivals: list(instance.arrivals)}


def instance_from_dict(data: dict) -> tuple[ArrivalInstance, SystemParams]:
    """
    Decode an instance document without checking feasibility.

    Returns:
        tuple: (ArrivalInstance, SystemParams)

    Raises:
        InstanceFormatError: If keys are missing or values have the wrong type.
    """
    if not isinstance(data, dict) or IK.params not in data or IK.arrivals not in data:
        raise InstanceFormatError(
            f"Instance must be an object with '{IK.params}' and '{IK.arrivals}'"
        )
    params = params_from_dict(data[IK.params])
    arrivals = data[IK.arrivals]
    if not isinstance(arrivals, list):
        raise InstanceFormatError(f"'{IK.arrivals}' must be a list of integer ticks")
    instance = ArrivalInstance(tuple(_as_int(a, IK.arrivals) for a in arrivals))
    return instance, params


def schedule_to_dict(schedule: Schedule) -> dict:
    return {
        SK.aps: [
            {
                SK.start: _plain_number(ap.start),
                SK.end: _plain_number(ap.end),
                SK.first_task: ap.first_task,
                SK.last_task: ap.last_task,
            }
            for ap in schedule.aps
        ]
    }


def schedule_from_dict(data: dict) -> Schedule:
    try:
        return Schedule(
            tuple(
                ActivePeriod(
                    start=_plain_number(ap[SK.start]),
                    end=_plain_number(ap[SK.end]),
                    first_task=int(ap[SK.first_task]),
                    last_task=int(ap[SK.last_task]),
                )
                for ap in data[SK.aps]
            )
        )
    except (KeyError, TypeError) as e:
        raise InstanceFormatError(f"Malformed schedule document: {e}") from e


def cost_to_dict(cost: CostBreakdown) -> dict:
    return {key: _plain_number(value) for key, value in asdict(cost).items()}


def load_problem(path: Union[str, Path]) -> tuple[ArrivalInstance, SystemParams]:
    """
    Load, validate and feasibility-check an instance JSON file.

    Args:
        path: Location of the instance document.

    Returns:
        tuple: (ArrivalInstance, SystemParams) ready for the solvers.

    Raises:
        OSError: If the file cannot be read.
        json.JSONDecodeError: If the file is not JSON.
        InstanceFormatError: If the document does not follow the instance format.
        InvalidParams: If the parameters violate their invariants.
        InfeasibleInstance: If some window of d ticks holds too many arrivals.
    """
    # Import inside function to avoid circular imports
    from evaluation import ensure_feasible, validate_params

    with open(path, "r") as file:
        data = json.load(file)

    instance, params = instance_from_dict(data)
    validate_params(params)
    ensure_feasible(instance, params)
    logger.debug("Loaded %d arrivals from %s", instance.n_tasks, path)
    return instance, params


def save_instance(
    path: Union[str, Path], instance: ArrivalInstance, params: SystemParams
) -> None:
    _write_json(path, instance_to_dict(instance, params))


def load_schedule(path: Union[str, Path]) -> Schedule:
    with open(path, "r") as file:
        return schedule_from_dict(json.load(file))


def save_schedule(path: Union[str, Path], schedule: Schedule) -> None:
    _write_json(path, schedule_to_dict(schedule))


def write_json(path: Union[str, Path], document: Union[dict, list]) -> None:
    """Write any JSON-ready document with stable formatting."""
    _write_json(path, document)


def _write_json(path: Union[str, Path], document: Union[dict, list]) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as file:
        json.dump(document, file, indent=2)
        file.write("\n")


def _as_int(value, name: str) -> int:
    try:
        as_int = int(value)
    except (TypeError, ValueError):
        as_int = None
    if isinstance(value, bool) or as_int is None or as_int != value:
        raise InstanceFormatError(f"'{name}' must hold integer ticks, got {value!r}")
    return as_int


def _plain_number(value):
    # Keep integral times as ints so schedules print as [[9, 10], ...]
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value
