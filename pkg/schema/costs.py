from dataclasses import dataclass

from .params import SystemParams


@dataclass(frozen=True)
class CostBreakdown:
    """
    Objective value of a schedule split into its components.

    total = wakeups * C_W + busy_ticks * C_B + idle_ticks * C_I
    """

    wakeups: int
    busy_ticks: float
    idle_ticks: float
    total: float

    @classmethod
    def from_components(
        cls, wakeups: int, busy_ticks: float, idle_ticks: float, params: SystemParams
    ) -> "CostBreakdown":
        total = (
            wakeups * params.c_wake
            + busy_ticks * params.c_busy
            + idle_ticks * params.c_idle
        )
        return cls(wakeups, busy_ticks, idle_ticks, total)

    @classmethod
    def empty(cls) -> "CostBreakdown":
        return cls(0, 0, 0, 0.0)

    def recompute_total(self, params: SystemParams) -> float:
        """Re-derive the total from the components."""
        return (
            self.wakeups * params.c_wake
            + self.busy_ticks * params.c_busy
            + self.idle_ticks * params.c_idle
        )

    def __add__(self, other: "CostBreakdown") -> "CostBreakdown":
        return CostBreakdown(
            self.wakeups + other.wakeups,
            self.busy_ticks + other.busy_ticks,
            self.idle_ticks + other.idle_ticks,
            self.total + other.total,
        )
