import math
from dataclasses import dataclass

from schema import SystemParams

from .policies import PolicyKind, SleepPolicy

# Expected cost of one long gap under the randomized threshold, in units of C_W
RANDOMIZED_GAP_FACTOR = math.e / (math.e - 1.0)


@dataclass(frozen=True)
class CompetitiveParams:
    """
    Quantities governing the competitive ratios.

    gamma = C_B * beta / C_W compares serving one task with one wake-up;
    tau = C_W / C_I is the idle time worth one wake-up.
    """

    gamma: float
    tau: float

    @classmethod
    def from_params(cls, params: SystemParams) -> "CompetitiveParams":
        gamma = params.task_cost / params.c_wake if params.c_wake > 0 else math.inf
        return cls(gamma=gamma, tau=params.sleep_threshold)


def best_deterministic_theta(params: SystemParams) -> float:
    """The threshold minimizing the deterministic ratio, theta = C_W / C_I."""
    return params.sleep_threshold


def competitive_ratio_bound(policy: SleepPolicy, params: SystemParams, n_tasks: int) -> float:
    """
    Worst-case ratio of on-line to off-line cost on N single-task APs.

    Deterministic(theta):
        (C_W + N C_B beta + (N-1)(C_I theta + C_W))
        / (C_W + N C_B beta + (N-1) min(C_I theta, C_W))
    Randomized: the gap term becomes e/(e-1) C_W over C_W.

    Examples (C_B beta = 1, C_W = 10, C_I = 1):
        deterministic(10), N = 1000 -> 20990 / 11000
    """
    if n_tasks < 1:
        raise ValueError(f"need at least one task, got {n_tasks}")

    fixed = params.c_wake + n_tasks * params.task_cost
    gaps = n_tasks - 1
    if policy.kind is PolicyKind.RANDOMIZED:
        online = fixed + gaps * RANDOMIZED_GAP_FACTOR * params.c_wake
        offline = fixed + gaps * params.c_wake
    else:
        theta = policy.theta or 0.0
        online = fixed + gaps * (params.c_idle * theta + params.c_wake)
        offline = fixed + gaps * min(params.c_idle * theta, params.c_wake)

    if offline == 0:
        return 1.0
    return online / offline


def competitive_ratio_limit(policy: SleepPolicy, params: SystemParams) -> float:
    """
    Limit of competitive_ratio_bound as N grows.

    Deterministic with theta = C_W/C_I gives (2 + gamma)/(1 + gamma); the
    randomized policy gives (gamma + e/(e-1))/(gamma + 1).
    """
    per_gap_fixed = params.task_cost
    if policy.kind is PolicyKind.RANDOMIZED:
        online = per_gap_fixed + RANDOMIZED_GAP_FACTOR * params.c_wake
        offline = per_gap_fixed + params.c_wake
    else:
        theta = policy.theta or 0.0
        online = per_gap_fixed + params.c_idle * theta + params.c_wake
        offline = per_gap_fixed + min(params.c_idle * theta, params.c_wake)

    if offline == 0:
        return 1.0
    return online / offline
