from typing import Optional

import numpy as np

from schema import ArrivalInstance, InfeasibleInstance, SystemParams


def find_violating_window(
    instance: ArrivalInstance, params: SystemParams
) -> Optional[tuple[int, int]]:
    """
    Locate the first half-open window [t, t+d) holding too many arrivals.

    Only windows starting at an arrival need testing: sliding a window right
    until its left edge meets an arrival never loses an arrival.

    Returns:
        tuple or None: (window_start, count) of the first violating window,
            None if every window holds at most floor(d/beta) arrivals.
    """
    if instance.n_tasks == 0:
        return None

    arrivals = np.asarray(instance.arrivals, dtype=np.int64)
    # First index at or beyond t + d, for every window start t = a_i
    window_ends = np.searchsorted(arrivals, arrivals + params.d, side="left")
    counts = window_ends - np.arange(len(arrivals))
    violating = np.flatnonzero(counts > params.max_tasks_per_window)
    if violating.size == 0:
        return None

    first = int(violating[0])
    return int(arrivals[first]), int(counts[first])


def check_feasibility(instance: ArrivalInstance, params: SystemParams) -> bool:
    """
    True iff every window [t, t+d) contains at most floor(d/beta) arrivals.

    Examples:
        arrivals [0, 19], d=10, beta=1     -> True
        11 arrivals at 0, d=10, beta=1     -> False
        10 arrivals at 0, d=10, beta=1     -> True
    """
    return find_violating_window(instance, params) is None


def ensure_feasible(instance: ArrivalInstance, params: SystemParams) -> None:
    """Raise InfeasibleInstance naming the first violating window."""
    violation = find_violating_window(instance, params)
    if violation is not None:
        window_start, count = violation
        raise InfeasibleInstance(window_start, count, params.max_tasks_per_window)
