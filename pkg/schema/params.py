from dataclasses import dataclass


@dataclass(frozen=True)
class SystemParams:
    """
    Cost and timing parameters of a single ON-OFF server.

    All durations are integer ticks and all costs are unitless cost-units;
    physical units are bound only at the command-line layer. The dataclass
    does not validate itself: call evaluation.validate_params before use.

    Attributes:
        beta: Service time of one task in ticks (task size over service rate).
        d: Relative deadline in ticks, identical for every task.
        c_wake: Cost charged on every OFF to ON transition.
        c_busy: Operating cost per tick while serving.
        c_idle: Operating cost per tick while awake without backlog.
    """

    beta: int
    d: int
    c_wake: float
    c_busy: float
    c_idle: float

    @property
    def max_tasks_per_window(self) -> int:
        """Largest number of arrivals any window of d ticks may hold."""
        return self.d // self.beta

    @property
    def sleep_threshold(self) -> float:
        """Idle time whose cost equals one wake-up, C_W / C_I (inf when C_I = 0)."""
        if self.c_idle == 0:
            return float("inf")
        return self.c_wake / self.c_idle

    @property
    def task_cost(self) -> float:
        """Cost of serving one task, C_B * beta."""
        return self.c_busy * self.beta
