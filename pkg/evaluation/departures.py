from schema import (
    TIME_TOLERANCE,
    ArrivalInstance,
    DepartureVector,
    Schedule,
    ScheduleInfeasible,
    SystemParams,
)


def compute_departures(
    instance: ArrivalInstance, params: SystemParams, schedule: Schedule
) -> DepartureVector:
    """
    FIFO departure times of every task under a schedule.

    Inside an AP, x_j = max(a_j, x_{j-1}, ap.start) + beta, where x_{j-1} is
    ignored for the first task of the AP. Tasks never wait across APs.

    Args:
        instance: Arrival times.
        params: System parameters (only beta is used).
        schedule: APs whose task ranges must cover 1..N.

    Returns:
        DepartureVector: x_1..x_N.

    Raises:
        ScheduleInfeasible: If the ranges do not cover 1..N, an AP starts before
            its first task arrives, or a task cannot finish before its AP ends.

    Examples:
        arrivals [0, 19], schedule [[9, 20]]               -> x = [10, 20]
        arrivals [0, 19, 29], schedule [[9, 10], [28, 30]] -> x = [10, 29, 30]
    """
    if schedule.n_tasks != instance.n_tasks:
        missing = schedule.n_tasks + 1
        raise ScheduleInfeasible(
            missing if missing <= instance.n_tasks else schedule.n_tasks,
            f"schedule covers {schedule.n_tasks} tasks, instance has {instance.n_tasks}",
        )

    departures: list[float] = []
    for ap in schedule.aps:
        if ap.start < instance.arrival(ap.first_task):
            raise ScheduleInfeasible(
                ap.first_task,
                f"AP starts at {ap.start} before its first task arrives at "
                f"{instance.arrival(ap.first_task)}",
            )

        previous = float("-inf")
        for task in range(ap.first_task, ap.last_task + 1):
            begin = max(instance.arrival(task), previous, ap.start)
            previous = begin + params.beta
            departures.append(previous)

        if previous > ap.end + TIME_TOLERANCE:
            raise ScheduleInfeasible(
                ap.last_task,
                f"task departs at {previous} after its AP ends at {ap.end}",
            )

    return DepartureVector(tuple(departures))
