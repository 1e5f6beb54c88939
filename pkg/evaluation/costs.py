from schema import (
    TIME_TOLERANCE,
    ArrivalInstance,
    CostBreakdown,
    DeadlineMiss,
    Schedule,
    SystemParams,
)

from .departures import compute_departures


def evaluate_schedule(
    instance: ArrivalInstance, params: SystemParams, schedule: Schedule
) -> CostBreakdown:
    """
    Exact objective value of a schedule.

    total = alpha * C_W + sum_i [C_B * tau_iB + C_I * (t_i2 - t_i1 - tau_iB)]
    with tau_iB = (N_i^E - N_i^S + 1) * beta busy ticks in AP i.

    Raises:
        DeadlineMiss: For the first task departing after a_j + d.
        ScheduleInfeasible: Propagated from compute_departures.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1):
        arrivals [0, 19], schedule [[9, 20]]               -> total 21
        arrivals [0, 19], schedule [[9, 10], [28, 29]]     -> total 22
        arrivals [0, 19, 29], schedule [[9, 10], [28, 30]] -> total 23
    """
    departures = compute_departures(instance, params, schedule)

    for task in range(1, instance.n_tasks + 1):
        deadline = instance.deadline(task, params)
        if departures.departure(task) > deadline + TIME_TOLERANCE:
            raise DeadlineMiss(task, departures.departure(task), deadline)

    busy_ticks = 0
    idle_ticks = 0
    for ap in schedule.aps:
        busy = ap.busy_ticks(params.beta)
        busy_ticks += busy
        idle_ticks += ap.length - busy

    return CostBreakdown.from_components(
        schedule.n_wakeups, busy_ticks, idle_ticks, params
    )
