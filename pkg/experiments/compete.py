import logging

import numpy as np
import pandas as pd
from tqdm.auto import tqdm

from offline import solve_offline
from online import (
    CompetitiveParams,
    PolicyKind,
    SleepPolicy,
    best_deterministic_theta,
    competitive_ratio_bound,
    competitive_ratio_limit,
)
from simulation import adversarial_instance, simulate

from .config import CompeteConfig

logger = logging.getLogger(__name__)

COMPETE_COLUMNS = [
    "policy",
    "N",
    "gamma",
    "empirical_ratio",
    "theoretical_limit",
    "bound",
    "trials",
]


def trial_policies(kind: PolicyKind, config: CompeteConfig) -> list[SleepPolicy]:
    """
    Policies evaluated by one compete run.

    The deterministic policy runs once at theta = C_W/C_I. The randomized
    policy runs config.trials times; trial i is seeded from (seed, i).
    """
    params = config.params
    if kind is PolicyKind.DETERMINISTIC:
        return [SleepPolicy.deterministic(best_deterministic_theta(params))]
    if kind is PolicyKind.RANDOMIZED:
        return [
            SleepPolicy.randomized(int(np.random.SeedSequence([config.seed, trial]).generate_state(1)[0]))
            for trial in range(config.trials)
        ]
    raise ValueError(f"compete supports 'det' and 'rand', got '{kind.value}'")


def run_compete(
    kind: PolicyKind, config: CompeteConfig, progress: bool = True
) -> pd.DataFrame:
    """
    Empirical competitive ratio on the evenly spaced worst-case instance.

    The instance spaces arrivals beyond the deadline plus the larger of theta
    and C_W/C_I, so the off-line optimum serves every task in its own AP while
    the on-line controller idles through its threshold before each sleep.

    Returns:
        pd.DataFrame: A single row with COMPETE_COLUMNS; empirical_ratio is the
            mean on-line cost over all trials divided by the off-line cost.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1, N=1000):
        det  -> empirical 20990 / 11000, limit 21 / 11
        rand -> empirical near (0.1 + e/(e-1)) / 1.1
    """
    params = config.params
    policies = trial_policies(kind, config)
    theta = policies[0].theta if kind is PolicyKind.DETERMINISTIC else params.sleep_threshold

    instance = adversarial_instance(config.n_tasks, config.adversarial_gap(theta), params)
    _, offline = solve_offline(instance, params)

    online_costs = []
    for policy in tqdm(policies, desc=f"compete-{kind.value}", disable=not progress):
        trace = simulate(instance, params, policy, record_events=False)
        online_costs.append(trace.cost.total)

    empirical = float(np.mean(online_costs)) / offline.total
    row = {
        "policy": kind.value,
        "N": config.n_tasks,
        "gamma": CompetitiveParams.from_params(params).gamma,
        "empirical_ratio": empirical,
        "theoretical_limit": competitive_ratio_limit(policies[0], params),
        "bound": competitive_ratio_bound(policies[0], params, config.n_tasks),
        "trials": len(policies),
    }
    logger.info(
        "%s on %d tasks: empirical %.6f, bound %.6f, limit %.6f",
        kind.value,
        config.n_tasks,
        row["empirical_ratio"],
        row["bound"],
        row["theoretical_limit"],
    )
    return pd.DataFrame([row], columns=COMPETE_COLUMNS)
