import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from schema import ArrivalInstance, GenerationStalled, SystemParams

logger = logging.getLogger(__name__)

MAX_REDRAWS = 1_000_000


@dataclass(frozen=True)
class GenConfig:
    """
    Random instance settings.

    Attributes:
        n_tasks: Number of arrivals N.
        max_gap: Largest interarrival time in ticks; gaps are uniform on
            the integers 1..max_gap.
        seed: Seed of the numpy Generator, None for fresh entropy.
    """

    n_tasks: int
    max_gap: int
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_gap < 1:
            raise ValueError(f"max_gap must be at least 1 tick, got {self.max_gap}")
        if self.n_tasks < 0:
            raise ValueError(f"n_tasks must be nonnegative, got {self.n_tasks}")


def generate_instance(cfg: GenConfig, params: SystemParams) -> ArrivalInstance:
    """
    Random feasible instance with uniform integer interarrival gaps.

    The first task arrives at 0. A gap that would put more than floor(d/beta)
    arrivals into some window of d ticks is redrawn, which biases the gap
    distribution upward for small max_gap. When even max_gap cannot restore
    the bound the smallest feasible gap is used.

    Raises:
        GenerationStalled: If MAX_REDRAWS draws fail for one task.

    Examples:
        GenConfig(5, 3, seed=1), beta=1, d=10 -> 5 arrivals, gaps in [1, 3]
    """
    rng = np.random.default_rng(cfg.seed)
    limit = params.max_tasks_per_window
    arrivals: list[int] = []

    for idx in range(cfg.n_tasks):
        if idx == 0:
            arrivals.append(0)
            continue

        previous = arrivals[-1]
        required = 1
        if idx >= limit:
            # Window [a_{i-limit}, a_{i-limit} + d) already holds `limit` arrivals
            required = max(1, arrivals[idx - limit] + params.d - previous)

        if required > cfg.max_gap:
            logger.debug("Task %d: gap forced to %d ticks", idx + 1, required)
            arrivals.append(previous + required)
            continue

        for _ in range(MAX_REDRAWS):
            gap = int(rng.integers(1, cfg.max_gap, endpoint=True))
            if gap >= required:
                break
        else:
            raise GenerationStalled(idx + 1, MAX_REDRAWS)
        arrivals.append(previous + gap)

    return ArrivalInstance(tuple(arrivals))


def adversarial_instance(n_tasks: int, gap: int, params: SystemParams) -> ArrivalInstance:
    """
    Evenly spaced arrivals 0, gap, 2*gap, ...

    With gap above both d + C_W/C_I and the controller's threshold every task
    forms its own AP in the off-line optimum while an on-line controller idles
    through its full threshold before every sleep.
    """
    if gap < params.beta:
        logger.warning("Gap %d is shorter than one service time %d", gap, params.beta)
    return ArrivalInstance(tuple(int(idx * gap) for idx in range(n_tasks)))
