from typing import Optional

from schema import ArrivalInstance, SystemParams


def optimal_ap_start(
    instance: ArrivalInstance,
    params: SystemParams,
    first_task: int,
    last_task: Optional[int] = None,
) -> int:
    """
    Latest (hence optimal) start time of an AP whose first task is k.

    Without other arrivals in [a_k, d_k - beta) the AP starts at d_k - beta,
    finishing task k exactly at its deadline. Otherwise every arrival j in that
    window has the offset delta_j = beta * (j - k) - (a_j - a_k) and the AP
    starts max(delta_z, 0) ticks earlier, z being the maximizer (smallest j on
    ties). Arrivals at or after d_k - beta join the backlog but never move the
    start.

    Args:
        instance: Arrival times.
        params: System parameters.
        first_task: 1-based index k of the starting task.
        last_task: Optional 1-based index bounding the tasks considered, used
            to evaluate a task group in isolation. Defaults to N.

    Returns:
        int: Start tick s with a_k <= s <= d_k - beta.

    Examples (d=10):
        arrivals [0], beta=1, k=1        -> 9
        arrivals [0, 19, 29], beta=1, k=2 -> 28
        arrivals [0, 1], beta=2, k=1     -> 7
    """
    _, delta = critical_offset(instance, params, first_task, last_task)
    return instance.deadline(first_task, params) - params.beta - max(delta, 0)


def critical_offset(
    instance: ArrivalInstance,
    params: SystemParams,
    first_task: int,
    last_task: Optional[int] = None,
) -> tuple[int, int]:
    """
    Task z with the largest offset delta_z inside [a_k, d_k - beta), and delta_z.

    Task k itself always lies in the window with delta_k = 0.
    """
    last = instance.n_tasks if last_task is None else last_task
    a_k = instance.arrival(first_task)
    window_end = a_k + params.d - params.beta

    best_task, best_delta = first_task, 0
    task = first_task + 1
    while task <= last and instance.arrival(task) < window_end:
        delta = params.beta * (task - first_task) - (instance.arrival(task) - a_k)
        # Strict comparison keeps the smallest maximizer
        if delta > best_delta:
            best_task, best_delta = task, delta
        task += 1

    return best_task, best_delta
