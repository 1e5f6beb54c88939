from dataclasses import dataclass

from .errors import InstanceFormatError
from .params import SystemParams


@dataclass(frozen=True)
class ArrivalInstance:
    """
    Sorted integer arrival times of N identical tasks.

    Tasks are numbered 1..N everywhere in this project, so `arrival(1)` is the
    first arrival. Whether the instance respects the per-window arrival bound
    depends on the system parameters and is checked by
    evaluation.check_feasibility, not here.
    """

    arrivals: tuple[int, ...]

    def __post_init__(self) -> None:
        # Accept any sequence but store an immutable tuple of ints
        arrivals = tuple(int(a) for a in self.arrivals)
        for a, raw in zip(arrivals, self.arrivals):
            if a != raw:
                raise InstanceFormatError(f"Arrival times must be integer ticks, got {raw!r}")
        for idx in range(1, len(arrivals)):
            if arrivals[idx] < arrivals[idx - 1]:
                raise InstanceFormatError(
                    f"Arrivals must be nondecreasing: task {idx + 1} arrives at "
                    f"{arrivals[idx]} before task {idx} at {arrivals[idx - 1]}"
                )
        object.__setattr__(self, "arrivals", arrivals)

    @property
    def n_tasks(self) -> int:
        return len(self.arrivals)

    def __len__(self) -> int:
        return len(self.arrivals)

    def arrival(self, task: int) -> int:
        """Arrival time a_task of a 1-based task index."""
        return self.arrivals[task - 1]

    def deadline(self, task: int, params: SystemParams) -> int:
        """Absolute deadline d_task = a_task + d."""
        return self.arrivals[task - 1] + params.d

    def subinstance(self, first: int, last: int) -> "ArrivalInstance":
        """Tasks first..last (1-based, inclusive) renumbered from 1."""
        return ArrivalInstance(self.arrivals[first - 1 : last])
