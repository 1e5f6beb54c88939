from schema import ActivePeriod, ArrivalInstance, SystemParams

from .dp import DpSolution, NodeKind


def traceback(
    instance: ArrivalInstance, params: SystemParams, solution: DpSolution
) -> tuple[ActivePeriod, ...]:
    """
    Active periods of one SAP recovered from the DP back-pointers.

    Walking the chain from the root J_k^S: an S node opens a new AP at its
    optimal start; an F successor keeps the system active through its arrival;
    an S successor closes the current AP right after the preceding task
    departs. The last AP ends at the final departure of the SAP.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1):
        arrivals [0, 19, 29] -> [[9, 10], [28, 30]]
        arrivals [0, 19]     -> [[9, 20]]
        arrivals [0]         -> [[9, 10]]
    """
    aps = []
    node = solution.root
    group_first, group_start = node.task, node.anchor

    while node.next is not None:
        successor = node.next
        if successor.kind is NodeKind.STARTING:
            aps.append(
                _close_ap(instance, params, group_start, group_first, successor.task - 1)
            )
            group_first, group_start = successor.task, successor.anchor
        node = successor

    aps.append(_close_ap(instance, params, group_start, group_first, solution.sap.last))
    return tuple(aps)


def _close_ap(
    instance: ArrivalInstance, params: SystemParams, start: int, first: int, last: int
) -> ActivePeriod:
    # The AP ends at the FIFO departure of its last task
    departure = start
    for task in range(first, last + 1):
        departure = max(departure, instance.arrival(task)) + params.beta
    return ActivePeriod(start=start, end=departure, first_task=first, last_task=last)
