import logging
import math

from evaluation import evaluate_schedule
from schema import (
    ActivePeriod,
    ArrivalInstance,
    CostBreakdown,
    DeadlineMiss,
    NoFeasibleStart,
    Schedule,
    SystemParams,
    TooLarge,
)

from .latest_start import latest_feasible_start_grid
from .partitions import PartitionEnumeration

logger = logging.getLogger(__name__)

MAX_TASKS = 20
COST_TOLERANCE = 1e-9


def brute_force_optimal(
    instance: ArrivalInstance, params: SystemParams, max_tasks: int = MAX_TASKS
) -> tuple[Schedule, CostBreakdown]:
    """
    Minimum-cost schedule over every split of the tasks into consecutive APs.

    Each group's AP starts at its latest feasible start (grid scan) and ends at
    its last departure. A split is skipped when a group boundary is not a
    decision point (the previous group's last departure is not strictly before
    the next group's first arrival) or when some group has no feasible start.
    Ties are broken by the lexicographically smallest list of groups.

    Args:
        instance: Arrival times, at most max_tasks of them.
        params: System parameters.
        max_tasks: Guard on N; the search visits 2^(N-1) splits.

    Returns:
        tuple: (Schedule, CostBreakdown) of the best split.

    Raises:
        TooLarge: If N exceeds max_tasks.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1):
        arrivals [0, 19, 29] -> 23 via {1} | {2, 3}
        arrivals [0, 19]     -> 21 via {1, 2}
    """
    if instance.n_tasks > max_tasks:
        raise TooLarge(instance.n_tasks, max_tasks)
    if instance.n_tasks == 0:
        return Schedule(), CostBreakdown.empty()

    aps = _candidate_aps(instance, params)
    enumeration = PartitionEnumeration(instance.n_tasks)

    best_cost, best_groups = math.inf, None
    for boundaries in enumeration:
        groups = enumeration.groups(boundaries)
        if not all(group in aps for group in groups):
            continue
        if not _boundaries_are_decision_points(instance, aps, groups):
            continue

        total = sum(aps[group][1] for group in groups)
        if total < best_cost - COST_TOLERANCE or (
            abs(total - best_cost) <= COST_TOLERANCE and groups < best_groups
        ):
            best_cost, best_groups = total, groups

    if best_groups is None:
        raise NoFeasibleStart(1, instance.n_tasks)

    schedule = Schedule(tuple(aps[group][0] for group in best_groups))
    cost = evaluate_schedule(instance, params, schedule)
    logger.debug("Brute force over %d splits: cost %g", len(enumeration), cost.total)
    return schedule, cost


def _candidate_aps(instance: ArrivalInstance, params: SystemParams) -> dict:
    """Every feasible single-AP group (first, last) -> (ActivePeriod, cost)."""
    candidates = {}
    for first in range(1, instance.n_tasks + 1):
        for last in range(first, instance.n_tasks + 1):
            try:
                start = latest_feasible_start_grid(instance, params, first, last)
            except NoFeasibleStart:
                continue

            end = start
            for task in range(first, last + 1):
                end = max(end, instance.arrival(task)) + params.beta
            ap = ActivePeriod(start=start, end=end, first_task=1, last_task=last - first + 1)

            # Price the group through the core evaluation on its own tasks
            try:
                cost = evaluate_schedule(
                    instance.subinstance(first, last), params, Schedule((ap,))
                )
            except DeadlineMiss:
                continue
            candidates[(first, last)] = (
                ActivePeriod(start=start, end=end, first_task=first, last_task=last),
                cost.total,
            )
    return candidates


def _boundaries_are_decision_points(
    instance: ArrivalInstance, aps: dict, groups: list[tuple[int, int]]
) -> bool:
    for previous, following in zip(groups, groups[1:]):
        previous_end = aps[previous][0].end
        following_ap = aps[following][0]
        if not previous_end < instance.arrival(following[0]):
            return False
        if not previous_end < following_ap.start:
            return False
    return True
