from schema import SystemParams

from .policies import PolicyKind, SleepPolicy
from .sampling import sample_theta


def decide_idle_budget(
    policy: SleepPolicy, params: SystemParams, decision_index: int = 0
) -> float:
    """
    Idle time granted at a decision point before the system goes to sleep.

    Deterministic -> theta; Naive -> 0; Randomized -> inverse-CDF sample of
    the threshold from the stream of this decision point, within [0, C_W/C_I].
    """
    if policy.kind is PolicyKind.NAIVE:
        return 0.0
    if policy.kind is PolicyKind.DETERMINISTIC:
        return policy.theta
    return sample_theta(policy.uniform_draw(decision_index), params)
