from dataclasses import dataclass

from .errors import ScheduleInfeasible

# Slack for comparing AP boundaries that may come from real-valued sleep timers
TIME_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ActivePeriod:
    """
    One contiguous interval [start, end] during which the system is ON.

    The AP serves tasks first_task..last_task (1-based, inclusive) in FIFO
    order. Off-line schedules have integer boundaries; on-line simulations may
    end an AP at a real-valued sleep instant.
    """

    start: float
    end: float
    first_task: int
    last_task: int

    def __post_init__(self) -> None:
        if not self.start < self.end:
            raise ScheduleInfeasible(
                self.first_task, f"active period [{self.start}, {self.end}] is empty"
            )
        if self.first_task > self.last_task:
            raise ScheduleInfeasible(
                self.first_task,
                f"task range {self.first_task}..{self.last_task} is empty",
            )

    @property
    def n_tasks(self) -> int:
        return self.last_task - self.first_task + 1

    @property
    def length(self) -> float:
        return self.end - self.start

    def busy_ticks(self, beta: int) -> int:
        """Time spent serving, tau_B = (last - first + 1) * beta."""
        return self.n_tasks * beta


@dataclass(frozen=True)
class Schedule:
    """
    Ordered, disjoint active periods whose task ranges are consecutive from 1.

    The number of wake-ups equals the number of APs. Whether the ranges end at
    task N is checked against an instance by evaluation.compute_departures.
    """

    aps: tuple[ActivePeriod, ...] = ()

    def __post_init__(self) -> None:
        aps = tuple(self.aps)
        object.__setattr__(self, "aps", aps)

        expected_first = 1
        for idx, ap in enumerate(aps):
            if ap.first_task != expected_first:
                raise ScheduleInfeasible(
                    expected_first,
                    f"AP {idx + 1} starts at task {ap.first_task}, expected {expected_first}",
                )
            expected_first = ap.last_task + 1
            # APs must be strictly ordered: t_{i,2} < t_{i+1,1}
            if idx > 0 and not aps[idx - 1].end < ap.start:
                raise ScheduleInfeasible(
                    ap.first_task,
                    f"AP {idx + 1} starts at {ap.start} before AP {idx} ends at {aps[idx - 1].end}",
                )

    def __len__(self) -> int:
        return len(self.aps)

    def __iter__(self):
        return iter(self.aps)

    @property
    def n_wakeups(self) -> int:
        return len(self.aps)

    @property
    def n_tasks(self) -> int:
        return self.aps[-1].last_task if self.aps else 0

    def bounds(self) -> list[list[float]]:
        """AP boundaries as [[start, end], ...]."""
        return [[ap.start, ap.end] for ap in self.aps]


@dataclass(frozen=True)
class DepartureVector:
    """Departure times x_1..x_N of a schedule, indexed by 1-based task."""

    x: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.x)

    def departure(self, task: int) -> float:
        return self.x[task - 1]
