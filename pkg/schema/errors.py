"""
Exception hierarchy for the ON-OFF control library.

Library code raises these; only the command-line front end (main.py) turns
them into exit codes. Every error keeps the offending values as attributes so
callers can report them without parsing messages.
"""


class OnOffError(Exception):
    """Root of all errors raised by this project."""


class InvalidParams(OnOffError, ValueError):
    """A SystemParams invariant does not hold."""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"Invalid system parameters: {reason}")


class InstanceFormatError(OnOffError, ValueError):
    """An instance or schedule document could not be decoded."""


class InfeasibleInstance(OnOffError):
    """The arrival instance violates the per-window arrival bound."""

    def __init__(self, window_start: int, count: int, limit: int) -> None:
        self.window_start = window_start
        self.count = count
        self.limit = limit
        super().__init__(
            f"Infeasible instance: window [{window_start}, {window_start}+d) holds "
            f"{count} arrivals, at most {limit} allowed"
        )


class ScheduleInfeasible(OnOffError):
    """A schedule cannot serve a task inside its active period."""

    def __init__(self, task: int, reason: str) -> None:
        self.task = task
        self.reason = reason
        super().__init__(f"Schedule infeasible at task {task}: {reason}")


class DeadlineMiss(OnOffError):
    """A task departs after its deadline."""

    def __init__(self, task: int, departure: float, deadline: float) -> None:
        self.task = task
        self.departure = departure
        self.deadline = deadline
        super().__init__(
            f"Task {task} departs at {departure:g} after its deadline {deadline:g}"
        )


class ArrivalAfterWake(OnOffError):
    """The on-line wake-up mechanism saw an arrival at or after its wake time."""

    def __init__(self, arrival: float, scheduled_wake: float) -> None:
        self.arrival = arrival
        self.scheduled_wake = scheduled_wake
        super().__init__(
            f"Arrival at {arrival:g} is not before the scheduled wake-up "
            f"{scheduled_wake:g}; the system should already be awake"
        )


class NoFeasibleStart(OnOffError):
    """No start time lets a task group meet all of its deadlines."""

    def __init__(self, first_task: int, last_task: int) -> None:
        self.first_task = first_task
        self.last_task = last_task
        super().__init__(
            f"No feasible start for the group of tasks {first_task}..{last_task}"
        )


class TooLarge(OnOffError):
    """An exhaustive search was asked to run on too many tasks."""

    def __init__(self, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"Instance has {size} tasks, exhaustive search allows {limit}")


class GenerationStalled(OnOffError):
    """The instance generator could not draw a feasible gap."""

    def __init__(self, task: int, redraws: int) -> None:
        self.task = task
        self.redraws = redraws
        super().__init__(f"No feasible gap for task {task} after {redraws} redraws")
