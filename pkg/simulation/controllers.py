from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Optional

from online import SleepPolicy, decide_idle_budget
from schema import ActivePeriod, Schedule, SystemParams
from wakeup import WakeupState, online_wakeup_update, start_wakeup

if TYPE_CHECKING:
    from .engine import Simulator


class BaseController(ABC):
    """
    Decides when the simulated server wakes up and how long it idles.

    The simulator owns the clock, the backlog and the accounting. A controller
    reacts to arrivals at an OFF server and to wake-ups and sleeps, and answers
    the idle budget at every decision point.
    """

    @property
    @abstractmethod
    def label(self) -> str:
        """Short description written into traces and summary rows."""

    def begin(self, simulator: "Simulator") -> None:
        """Called once before the first event is processed."""

    @abstractmethod
    def on_arrival_while_off(self, simulator: "Simulator", task: int, time: float) -> None:
        """A task arrived while the server is OFF."""

    @abstractmethod
    def idle_budget(self, simulator: "Simulator", time: float, decision_index: int) -> float:
        """Idle time granted at a decision point before sleeping."""

    def on_wake(self, simulator: "Simulator", time: float) -> None:
        """The server just woke up."""

    def on_sleep(self, simulator: "Simulator", time: float) -> None:
        """The server just went to sleep."""


class OnlineController(BaseController):
    """
    On-line control: latest-start wake-up plus a sleep policy.

    Wake-ups follow the incremental mechanism of the wakeup package, except for
    the naive policy, which wakes at the instant a task finds the server OFF.
    """

    def __init__(self, policy: SleepPolicy, params: SystemParams) -> None:
        self.policy = policy
        self.params = params
        self._pending: Optional[WakeupState] = None

    @property
    def label(self) -> str:
        return self.policy.label

    def on_arrival_while_off(self, simulator: "Simulator", task: int, time: float) -> None:
        if self._pending is None:
            if self.policy.wakes_on_arrival:
                self._pending = WakeupState(task, int(time), int(time))
            else:
                self._pending = start_wakeup(task, int(time), self.params)
            simulator.schedule_wakeup(self._pending.scheduled_wake)
            return

        # An arrival at the wake instant joins the backlog
        if time < self._pending.scheduled_wake:
            updated = online_wakeup_update(self._pending, int(time), self.params)
            if updated.scheduled_wake != self._pending.scheduled_wake:
                simulator.schedule_wakeup(updated.scheduled_wake)
            self._pending = updated

    def on_wake(self, simulator: "Simulator", time: float) -> None:
        self._pending = None

    def idle_budget(self, simulator: "Simulator", time: float, decision_index: int) -> float:
        return decide_idle_budget(self.policy, self.params, decision_index)


class ReplayController(BaseController):
    """
    Replays a fixed schedule: wake at every AP start, sleep at every AP end.

    At a decision point the server idles until the end of the current AP, so
    an off-line schedule is reproduced with its idle stretches.
    """

    def __init__(self, schedule: Schedule) -> None:
        self.schedule = schedule
        self._next_ap = 0
        self._current: Optional[ActivePeriod] = None

    @property
    def label(self) -> str:
        return "replay"

    def begin(self, simulator: "Simulator") -> None:
        self._schedule_next(simulator)

    def on_arrival_while_off(self, simulator: "Simulator", task: int, time: float) -> None:
        pass

    def on_wake(self, simulator: "Simulator", time: float) -> None:
        self._current = self.schedule.aps[self._next_ap]
        self._next_ap += 1

    def on_sleep(self, simulator: "Simulator", time: float) -> None:
        self._schedule_next(simulator)

    def idle_budget(self, simulator: "Simulator", time: float, decision_index: int) -> float:
        return max(self._current.end - time, 0.0)

    def _schedule_next(self, simulator: "Simulator") -> None:
        if self._next_ap < len(self.schedule.aps):
            simulator.schedule_wakeup(self.schedule.aps[self._next_ap].start)
