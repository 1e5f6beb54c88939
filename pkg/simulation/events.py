import heapq
import itertools
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Optional


class EventKind(IntEnum):
    """Event kinds; the value is the processing order at equal times."""

    ARRIVAL = 0
    SERVICE_DONE = 1
    SLEEP_TIMER_EXPIRED = 2
    WAKE_UP = 3


@dataclass(frozen=True)
class SimEvent:
    """
    One timestamped simulation event.

    Attributes:
        time: Event instant; real-valued for sleep timers.
        kind: Arrival, ServiceDone, SleepTimerExpired or WakeUp.
        task: Task of Arrival/ServiceDone events, None otherwise.
        token: Generation of the timer that scheduled a SleepTimerExpired or
            WakeUp; stale tokens mark cancelled timers.
    """

    time: float
    kind: EventKind
    task: Optional[int] = None
    token: int = 0

    def to_dict(self) -> dict:
        return {"time": self.time, "kind": self.kind.name, "task": self.task}


@dataclass
class EventQueue:
    """
    Events sorted by (time, kind order, insertion order).

    Inserting an event earlier than the last one removed is an error: the
    simulation clock never runs backwards.
    """

    _heap: list = field(default_factory=list)
    _counter: itertools.count = field(default_factory=itertools.count)
    last_time: float = float("-inf")

    def __len__(self) -> int:
        return len(self._heap)

    def insert(self, event: SimEvent) -> None:
        if event.time < self.last_time:
            raise ValueError(
                f"event {event} is in the past (clock at {self.last_time:g})"
            )
        heapq.heappush(self._heap, (event.time, int(event.kind), next(self._counter), event))

    def pop(self) -> SimEvent:
        if not self._heap:
            raise IndexError("pop from an empty event queue")
        time, _, _, event = heapq.heappop(self._heap)
        self.last_time = time
        return event
