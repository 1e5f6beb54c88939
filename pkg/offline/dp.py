"""
Dynamic program over starting (S) and following (F) tasks of one SAP.

J_i^S is the optimal cost of serving tasks i..n when task i starts an AP and
J_i^F the optimal cost when task i finds the system already active. Both are
computed backward from task n; each node points to the node its optimal
continuation uses, so the optimal control can be traced back afterwards.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from schema import ArrivalInstance, SystemParams
from wakeup import optimal_ap_start

from .saps import SapRange

logger = logging.getLogger(__name__)

# Ties between the two branches go to the S branch (sleep)
COST_TOLERANCE = 1e-9


class NodeKind(str, Enum):
    STARTING = "S"
    FOLLOWING = "F"


@dataclass(frozen=True)
class DpNode:
    """
    Value J_i^S or J_i^F with its back-pointer.

    Attributes:
        task: 1-based task index i.
        kind: Whether task i starts an AP (S) or follows in an active one (F).
        value: Optimal cost of serving tasks i..n in this situation.
        anchor: Service start of task i: the optimal AP start for S nodes, the
            arrival a_i for F nodes.
        next: Node of the optimal continuation, None when tasks i..n are served
            in one busy run.
    """

    task: int
    kind: NodeKind
    value: float
    anchor: int
    next: Optional["DpNode"] = field(default=None, repr=False)


@dataclass(frozen=True)
class DpSolution:
    """All DP nodes of one SAP and the root J_k^S."""

    sap: SapRange
    nodes: dict
    root: DpNode

    def node(self, task: int, kind: NodeKind) -> DpNode:
        return self.nodes[(task, kind)]

    @property
    def value(self) -> float:
        return self.root.value


def solve_sap(
    instance: ArrivalInstance, params: SystemParams, sap: SapRange
) -> DpSolution:
    """
    Optimal cost of one SAP by backward iteration over its tasks.

    Base case: J_n^S = C_W + beta * C_B and J_n^F = beta * C_B. For i = n..k+1
    the values of task i-1 follow from the first task l that arrives after the
    busy run started by task i-1 has drained:

        J_{i-1}^S = min(V^SS + J_l^S, V^SF + J_l^F)
        J_{i-1}^F = min(V^FS + J_l^S, V^FF + J_l^F)

    where the V terms charge the busy run (plus C_W for S) and, for the F
    continuations, the idle time up to a_l. Without such an l the remaining
    tasks form a single busy run.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1):
        arrivals [0, 19, 29] -> J_2^S = 12, J_2^F = 11, J_1^S = 23
        arrivals [0, 19]     -> J_1^S = 21
    """
    k, n = sap.first, sap.last
    nodes: dict = {}

    nodes[(n, NodeKind.STARTING)] = DpNode(
        task=n,
        kind=NodeKind.STARTING,
        value=params.c_wake + params.task_cost,
        anchor=optimal_ap_start(instance, params, n, n),
    )
    nodes[(n, NodeKind.FOLLOWING)] = DpNode(
        task=n,
        kind=NodeKind.FOLLOWING,
        value=params.task_cost,
        anchor=instance.arrival(n),
    )

    for i in range(n, k, -1):
        start = optimal_ap_start(instance, params, i - 1, n)
        nodes[(i - 1, NodeKind.STARTING)] = _solve_node(
            instance, params, nodes, i - 1, n, NodeKind.STARTING, start
        )
        nodes[(i - 1, NodeKind.FOLLOWING)] = _solve_node(
            instance, params, nodes, i - 1, n, NodeKind.FOLLOWING, instance.arrival(i - 1)
        )

    root = nodes[(k, NodeKind.STARTING)]
    logger.debug("Solved SAP %d..%d with optimal cost %g", k, n, root.value)
    return DpSolution(sap=sap, nodes=nodes, root=root)


def _solve_node(
    instance: ArrivalInstance,
    params: SystemParams,
    nodes: dict,
    task: int,
    last: int,
    kind: NodeKind,
    anchor: int,
) -> DpNode:
    """Value and back-pointer of J_task^kind given the later nodes."""
    wake_cost = params.c_wake if kind is NodeKind.STARTING else 0.0
    l = _first_task_after_busy_run(instance, params, anchor, task, last)

    if l is None:
        # Tasks task..last are served back to back in one AP
        value = wake_cost + (last - task + 1) * params.task_cost
        return DpNode(task=task, kind=kind, value=value, anchor=anchor)

    busy = (l - task) * params.beta
    idle = instance.arrival(l) - anchor - busy
    assert idle > 0, (
        f"idle bracket before task {l} must be positive, got {idle} (anchor {anchor})"
    )

    v_sleep = wake_cost + busy * params.c_busy
    v_stay = v_sleep + idle * params.c_idle
    via_starting = v_sleep + nodes[(l, NodeKind.STARTING)].value
    via_following = v_stay + nodes[(l, NodeKind.FOLLOWING)].value

    if via_starting <= via_following + COST_TOLERANCE:
        return DpNode(task, kind, via_starting, anchor, nodes[(l, NodeKind.STARTING)])
    return DpNode(task, kind, via_following, anchor, nodes[(l, NodeKind.FOLLOWING)])


def _first_task_after_busy_run(
    instance: ArrivalInstance, params: SystemParams, anchor: int, task: int, last: int
) -> Optional[int]:
    """
    First task l > task arriving after the busy run that starts at anchor.

    Serving task, task+1, ... back to back from anchor, task j begins at
    anchor + (j - task) * beta. l is the first j with that instant strictly
    before a_j; None if every task up to last is already waiting.
    """
    for j in range(task + 1, last + 1):
        if anchor + (j - task) * params.beta < instance.arrival(j):
            return j
    return None
