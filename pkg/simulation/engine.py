"""
Event-driven simulation of one ON-OFF server.

The server is OFF, BUSY or IDLE. Arrivals queue FIFO; service of one task
takes beta ticks. A decision point is the instant the backlog empties while
tasks remain; there the controller grants an idle budget, and the server
sleeps if no task arrives before it runs out. Once the last task departs the
current AP is closed at that departure and nothing afterwards is charged.
"""

import logging
import math
from collections import deque
from enum import Enum
from typing import Optional

from evaluation import ensure_feasible, validate_params
from online import PolicyKind, SleepPolicy
from schema import (
    TIME_TOLERANCE,
    ActivePeriod,
    ArrivalInstance,
    DeadlineMiss,
    Schedule,
    SystemParams,
)

from .controllers import BaseController, OnlineController, ReplayController
from .events import EventKind, EventQueue, SimEvent
from .trace import DeadlineMissRecord, SimTrace

logger = logging.getLogger(__name__)


class ServerState(str, Enum):
    OFF = "off"
    BUSY = "busy"
    IDLE = "idle"


class Simulator:
    """
    Runs one instance through a controller and records a SimTrace.

    Sleep timers and wake-ups are cancelled by bumping a generation token, so
    at most one of each is live at any time; events carrying an older token
    are discarded when popped.
    """

    def __init__(
        self,
        instance: ArrivalInstance,
        params: SystemParams,
        controller: BaseController,
        raise_on_miss: bool = True,
        record_events: bool = True,
    ) -> None:
        self.instance = instance
        self.params = params
        self.controller = controller
        self.raise_on_miss = raise_on_miss
        self.record_events = record_events

        self.events = EventQueue()
        self.state = ServerState.OFF
        self.backlog: deque[int] = deque()
        self.served = 0
        self.trace = SimTrace(label=controller.label)

        self._sleep_token = 0
        self._wake_token = 0
        self._ap_start: Optional[float] = None
        self._ap_first: Optional[int] = None
        self._ap_last: Optional[int] = None

    def schedule_wakeup(self, time: float) -> None:
        """(Re)schedule the single pending wake-up, cancelling any earlier one."""
        self._wake_token += 1
        self.events.insert(SimEvent(time, EventKind.WAKE_UP, token=self._wake_token))

    def run(self) -> SimTrace:
        for task, arrival in enumerate(self.instance.arrivals, start=1):
            self.events.insert(SimEvent(arrival, EventKind.ARRIVAL, task=task))
        self.controller.begin(self)

        handlers = {
            EventKind.ARRIVAL: self._on_arrival,
            EventKind.SERVICE_DONE: self._on_service_done,
            EventKind.SLEEP_TIMER_EXPIRED: self._on_sleep_timer,
            EventKind.WAKE_UP: self._on_wake_up,
        }
        while len(self.events):
            event = self.events.pop()
            if self._is_stale(event):
                continue
            if self.record_events:
                self.trace.events.append(event)
            handlers[event.kind](event)

        if self.served != self.instance.n_tasks:
            raise RuntimeError(
                f"simulation ended with {self.instance.n_tasks - self.served} tasks unserved"
            )

        self.trace.cost = self.trace.recompute_cost(self.params)
        logger.debug(
            "%s: %d APs, cost %g, %d deadline misses",
            self.trace.label,
            len(self.trace.aps),
            self.trace.cost.total,
            len(self.trace.deadline_misses),
        )
        if self.raise_on_miss and self.trace.deadline_misses:
            miss = self.trace.deadline_misses[0]
            raise DeadlineMiss(miss.task, miss.departure, miss.deadline)
        return self.trace

    def _is_stale(self, event: SimEvent) -> bool:
        if event.kind is EventKind.SLEEP_TIMER_EXPIRED:
            return event.token != self._sleep_token or self.state is not ServerState.IDLE
        if event.kind is EventKind.WAKE_UP:
            return event.token != self._wake_token or self.state is not ServerState.OFF
        return False

    def _on_arrival(self, event: SimEvent) -> None:
        self.backlog.append(event.task)
        if self.state is ServerState.OFF:
            self.controller.on_arrival_while_off(self, event.task, event.time)
        elif self.state is ServerState.IDLE:
            self._sleep_token += 1
            self._start_service(event.time)

    def _on_wake_up(self, event: SimEvent) -> None:
        self._ap_start = event.time
        self._ap_first = None
        self.controller.on_wake(self, event.time)
        if self.backlog:
            self._start_service(event.time)
        else:
            self.state = ServerState.IDLE

    def _on_service_done(self, event: SimEvent) -> None:
        task = event.task
        self.served += 1
        self._ap_last = task
        self.trace.departures.append(event.time)

        deadline = self.instance.deadline(task, self.params)
        if event.time > deadline + TIME_TOLERANCE:
            self.trace.deadline_misses.append(DeadlineMissRecord(task, event.time, deadline))
            logger.warning("Task %d departed at %g after its deadline %d", task, event.time, deadline)

        if self.backlog:
            self._start_service(event.time)
        elif self.served == self.instance.n_tasks:
            self._close_ap(event.time)
        else:
            self._decision_point(event.time)

    def _on_sleep_timer(self, event: SimEvent) -> None:
        self._close_ap(event.time)
        self.controller.on_sleep(self, event.time)

    def _start_service(self, time: float) -> None:
        task = self.backlog.popleft()
        if self._ap_first is None:
            self._ap_first = task
        self.state = ServerState.BUSY
        self.events.insert(SimEvent(time + self.params.beta, EventKind.SERVICE_DONE, task=task))

    def _decision_point(self, time: float) -> None:
        budget = self.controller.idle_budget(self, time, self.trace.decision_points)
        self.trace.decision_points += 1
        self.state = ServerState.IDLE
        self._sleep_token += 1
        # An infinite budget (C_I = 0) keeps the server on until the next arrival
        if math.isfinite(budget):
            self.events.insert(
                SimEvent(time + budget, EventKind.SLEEP_TIMER_EXPIRED, token=self._sleep_token)
            )

    def _close_ap(self, end: float) -> None:
        self.trace.aps.append(
            ActivePeriod(
                start=self._ap_start,
                end=end,
                first_task=self._ap_first,
                last_task=self._ap_last,
            )
        )
        self.state = ServerState.OFF
        self._ap_start = self._ap_first = self._ap_last = None


def simulate(
    instance: ArrivalInstance,
    params: SystemParams,
    policy: SleepPolicy,
    raise_on_miss: bool = True,
    record_events: bool = True,
) -> SimTrace:
    """
    Simulate the on-line controller under a sleep policy.

    Args:
        instance: Arrival times; must satisfy the per-window bound.
        params: System parameters; the randomized policy needs C_I > 0.
        policy: Sleep policy applied at every decision point.
        raise_on_miss: Raise DeadlineMiss after the run if any task was late.
        record_events: Keep the processed events in the trace.

    Returns:
        SimTrace: Realized APs, departures, cost and events.

    Raises:
        InvalidParams, InfeasibleInstance: For invalid input.
        DeadlineMiss: If raise_on_miss and some task departed late.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1):
        arrivals [0, 19], det:10 -> APs [[9, 20]], total 21
        arrivals [0, 19], naive  -> APs [[0, 1], [19, 20]], total 22
    """
    validate_params(params, require_positive_idle=policy.kind is PolicyKind.RANDOMIZED)
    ensure_feasible(instance, params)
    controller = OnlineController(policy, params)
    return Simulator(instance, params, controller, raise_on_miss, record_events).run()


def replay_schedule(
    instance: ArrivalInstance,
    params: SystemParams,
    schedule: Schedule,
    raise_on_miss: bool = True,
) -> SimTrace:
    """
    Drive the simulator with a precomputed schedule.

    A feasible schedule that ends at the final departure is replayed at the
    cost evaluate_schedule assigns to it.
    """
    validate_params(params)
    ensure_feasible(instance, params)
    return Simulator(instance, params, ReplayController(schedule), raise_on_miss).run()
