"""
On-line wake-up mechanism.

Right after task k arrives at an OFF system, the wake-up is scheduled at
a_k + d - beta. Every further arrival before that instant recomputes the wake
time from the arrivals observed so far; otherwise the system wakes at the
scheduled time. The final wake time equals the off-line optimal AP start.
"""

from dataclasses import dataclass, replace

from schema import ArrivalAfterWake, SystemParams


@dataclass(frozen=True)
class WakeupState:
    """
    Caller-owned state of one pending wake-up.

    Attributes:
        first_task: 1-based index k of the task that found the system OFF.
        first_arrival: a_k.
        scheduled_wake: Current wake-up tick, within [a_k, a_k + d - beta].
        observed: Arrivals seen in [a_k, d_k - beta), task k included.
        max_delta: Largest offset beta * (j - k) - (a_j - a_k) seen so far.
    """

    first_task: int
    first_arrival: int
    scheduled_wake: int
    observed: int = 1
    max_delta: int = 0

    def window_end(self, params: SystemParams) -> int:
        return self.first_arrival + params.d - params.beta


def start_wakeup(first_task: int, arrival: int, params: SystemParams) -> WakeupState:
    """Schedule the initial wake-up at a_k + d - beta."""
    return WakeupState(
        first_task=first_task,
        first_arrival=arrival,
        scheduled_wake=arrival + params.d - params.beta,
    )


def online_wakeup_update(
    state: WakeupState, new_arrival: int, params: SystemParams
) -> WakeupState:
    """
    Recompute the wake-up time after another arrival at an OFF system.

    The state already carries everything the recomputation needs from the
    arrivals seen so far: their count and the largest offset. The result equals
    wakeup.optimal_ap_start applied to the observed prefix, and the scheduled
    wake-up never moves later.

    Raises:
        ArrivalAfterWake: If new_arrival is not strictly before the scheduled
            wake-up (the system should already have been woken).

    Examples (d=10):
        beta=1, a_1=0, no further arrival     -> wake at 9
        beta=2, a_1=0, arrival at 1           -> wake moves from 8 to 7
    """
    if new_arrival >= state.scheduled_wake:
        raise ArrivalAfterWake(new_arrival, state.scheduled_wake)

    # j - k equals the number of arrivals already observed
    delta = params.beta * state.observed - (new_arrival - state.first_arrival)
    max_delta = max(state.max_delta, delta)
    return replace(
        state,
        observed=state.observed + 1,
        max_delta=max_delta,
        scheduled_wake=state.window_end(params) - max(max_delta, 0),
    )
