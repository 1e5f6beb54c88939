from .competitive import (
    RANDOMIZED_GAP_FACTOR,
    CompetitiveParams,
    best_deterministic_theta,
    competitive_ratio_bound,
    competitive_ratio_limit,
)
from .control import decide_idle_budget
from .policies import POLICY_REGISTRY, PolicyKind, SleepPolicy, parse_policy
from .sampling import sample_theta, theta_cdf, theta_pdf

__all__ = [
    "PolicyKind",
    "SleepPolicy",
    "POLICY_REGISTRY",
    "parse_policy",
    "decide_idle_budget",
    "sample_theta",
    "theta_pdf",
    "theta_cdf",
    "CompetitiveParams",
    "RANDOMIZED_GAP_FACTOR",
    "best_deterministic_theta",
    "competitive_ratio_bound",
    "competitive_ratio_limit",
]
