from schema import ArrivalInstance, NoFeasibleStart, SystemParams


def latest_feasible_start_grid(
    instance: ArrivalInstance, params: SystemParams, first_task: int, last_task: int
) -> int:
    """
    Latest integer start of an AP serving tasks first..last, by exhaustive scan.

    Scans starts downward from d_k - beta to a_k and returns the first one whose
    FIFO departures meet the deadline of every task in the group. Shares no
    code with the closed-form start of the wakeup package.

    Raises:
        NoFeasibleStart: If even starting at a_k misses a deadline.

    Examples (d=10):
        arrivals [0, 19], beta=1, group 1..1 -> 9
        arrivals [0, 1], beta=2, group 1..2  -> 7
    """
    a_first = instance.arrival(first_task)
    for start in range(a_first + params.d - params.beta, a_first - 1, -1):
        if _meets_deadlines(instance, params, start, first_task, last_task):
            return start
    raise NoFeasibleStart(first_task, last_task)


def _meets_deadlines(
    instance: ArrivalInstance, params: SystemParams, start: int, first: int, last: int
) -> bool:
    departure = start
    for task in range(first, last + 1):
        departure = max(departure, instance.arrival(task)) + params.beta
        if departure > instance.arrival(task) + params.d:
            return False
    return True
