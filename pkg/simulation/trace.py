from dataclasses import asdict, dataclass, field

from schema import ActivePeriod, CostBreakdown, Schedule, SystemParams
from schema.io import cost_to_dict, schedule_to_dict

from .events import SimEvent


@dataclass(frozen=True)
class DeadlineMissRecord:
    task: int
    departure: float
    deadline: float


@dataclass
class SimTrace:
    """
    Everything one simulation run produced.

    Attributes:
        label: Controller description, e.g. "det:10" or "replay".
        events: Processed events in processing order.
        aps: Active periods as they were realized.
        departures: Departure time of every task, 1-based order.
        cost: Cost of the realized APs.
        deadline_misses: Tasks that departed after their deadline.
        decision_points: Number of decision points reached.
    """

    label: str
    events: list[SimEvent] = field(default_factory=list)
    aps: list[ActivePeriod] = field(default_factory=list)
    departures: list[float] = field(default_factory=list)
    cost: CostBreakdown = field(default_factory=CostBreakdown.empty)
    deadline_misses: list[DeadlineMissRecord] = field(default_factory=list)
    decision_points: int = 0

    @property
    def schedule(self) -> Schedule:
        return Schedule(tuple(self.aps))

    def recompute_cost(self, params: SystemParams) -> CostBreakdown:
        """Cost derived again from the AP records alone."""
        busy = sum(ap.busy_ticks(params.beta) for ap in self.aps)
        idle = sum(ap.length - ap.busy_ticks(params.beta) for ap in self.aps)
        return CostBreakdown.from_components(len(self.aps), busy, idle, params)

    def to_dict(self, include_events: bool = True) -> dict:
        document = {
            "label": self.label,
            "cost": cost_to_dict(self.cost),
            "schedule": schedule_to_dict(self.schedule),
            "departures": list(self.departures),
            "deadline_misses": [asdict(miss) for miss in self.deadline_misses],
            "decision_points": self.decision_points,
        }
        if include_events:
            document["events"] = [event.to_dict() for event in self.events]
        return document
