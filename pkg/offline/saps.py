import logging
from dataclasses import dataclass

from schema import ArrivalInstance, SystemParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SapRange:
    """
    Tasks first..last forming a super active period (SAP).

    Consecutive SAPs are separated by a gap longer than d + C_W/C_I, so the
    optimal schedule always sleeps between them and each SAP can be solved on
    its own.
    """

    first: int
    last: int

    @property
    def n_tasks(self) -> int:
        return self.last - self.first + 1

    def tasks(self) -> range:
        return range(self.first, self.last + 1)


def decompose_saps(instance: ArrivalInstance, params: SystemParams) -> list[SapRange]:
    """
    Split tasks 1..N into SAPs.

    A new SAP starts at task j+1 exactly when d_j + C_W/C_I < a_{j+1}. With
    C_I = 0 the threshold is infinite and one SAP spans every task.

    Examples (d=10, C_W/C_I=10):
        arrivals [0, 25]     -> [1..1], [2..2]
        arrivals [0, 19, 29] -> [1..3]
        arrivals [0]         -> [1..1]
    """
    if instance.n_tasks == 0:
        return []

    threshold = params.sleep_threshold
    if threshold == float("inf"):
        logger.warning("C_I = 0: sleeping is never forced, using a single SAP")
        return [SapRange(1, instance.n_tasks)]

    saps = []
    first = 1
    for task in range(1, instance.n_tasks):
        if instance.deadline(task, params) + threshold < instance.arrival(task + 1):
            saps.append(SapRange(first, task))
            first = task + 1
    saps.append(SapRange(first, instance.n_tasks))

    logger.debug("Decomposed %d tasks into %d SAPs", instance.n_tasks, len(saps))
    return saps
