import logging
import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional

import numpy as np
import pandas as pd
from tqdm.auto import tqdm

from offline import solve_offline
from online import SleepPolicy
from simulation import GenConfig, generate_instance, simulate

from .config import SweepConfig

logger = logging.getLogger(__name__)

THREADS_ENV = "ONOFF_THREADS"

SWEEP_COLUMNS = [
    "max_gap_ms",
    "c_wake_mJ",
    "optimal_cost",
    "naive_cost",
    "ratio",
    "optimal_wakeups",
    "naive_wakeups",
]


@dataclass(frozen=True)
class SweepJob:
    """One gap value of the sweep; all c_wake curves share its instance."""

    index: int
    max_gap_ms: int
    config: SweepConfig

    @property
    def seed(self) -> int:
        # Row stream depends only on (base seed, row index)
        sequence = np.random.SeedSequence([self.config.seed, self.index])
        return int(sequence.generate_state(1)[0])


def resolve_workers(workers: Optional[int] = None) -> int:
    """
    Worker process count: explicit value, else ONOFF_THREADS, else 1.

    Invalid environment values fall back to serial execution.
    """
    if workers is not None:
        return max(1, int(workers))
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", THREADS_ENV, raw)
        return 1


def run_sweep_job(job: SweepJob) -> list[dict]:
    """Off-line optimum and naive cost of one random instance per c_wake value."""
    config = job.config
    max_gap = config.scale.ticks(job.max_gap_ms)

    rows = []
    instance = None
    for c_wake in config.c_wake:
        params = config.params_for(c_wake)
        if instance is None:
            instance = generate_instance(GenConfig(config.n_tasks, max_gap, job.seed), params)

        schedule, optimal = solve_offline(instance, params)
        naive = simulate(instance, params, SleepPolicy.naive(), record_events=False)
        ratio = optimal.total / naive.cost.total if naive.cost.total > 0 else 1.0

        rows.append(
            {
                "max_gap_ms": job.max_gap_ms,
                "c_wake_mJ": c_wake,
                "optimal_cost": optimal.total,
                "naive_cost": naive.cost.total,
                "ratio": ratio,
                "optimal_wakeups": schedule.n_wakeups,
                "naive_wakeups": naive.cost.wakeups,
            }
        )
    return rows


def run_sweep_fig6(
    config: SweepConfig, workers: Optional[int] = None, progress: bool = True
) -> pd.DataFrame:
    """
    Cost of the off-line optimum relative to the naive controller.

    For every maximum gap in config.gaps_ms one instance is generated and both
    controllers are evaluated for every wake-up cost. Rows are sorted by
    (max_gap_ms, c_wake_mJ), so the result does not depend on the worker count.

    Args:
        config: Sweep parameters in physical units.
        workers: Worker processes; None reads ONOFF_THREADS.
        progress: Show a tqdm progress bar.

    Returns:
        pd.DataFrame: One row per (max_gap_ms, c_wake_mJ) with SWEEP_COLUMNS.
    """
    jobs = [
        SweepJob(index, gap_ms, config)
        for index, gap_ms in enumerate(config.gap_values_ms())
    ]
    workers = resolve_workers(workers)
    logger.info("Sweeping %d gaps x %d wake-up costs on %d workers",
                len(jobs), len(config.c_wake), workers)

    bar = tqdm(total=len(jobs), desc="sweep-fig6", disable=not progress)
    results: list[dict] = []
    if workers == 1:
        for job in jobs:
            results.extend(run_sweep_job(job))
            bar.update()
    else:
        with Pool(processes=workers) as pool:
            for rows in pool.imap_unordered(run_sweep_job, jobs):
                results.extend(rows)
                bar.update()
    bar.close()

    df = pd.DataFrame(results, columns=SWEEP_COLUMNS)
    return df.sort_values(["max_gap_ms", "c_wake_mJ"]).reset_index(drop=True)
