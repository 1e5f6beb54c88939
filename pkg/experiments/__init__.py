"""
Experiment runners and command implementations.

- sweep: off-line optimum against the naive controller over maximum gaps
- compete: empirical competitive ratios on the worst-case instance
- commands: the solve, simulate, sweep-fig6 and compete subcommands
"""

from .commands import cmd_compete, cmd_simulate, cmd_solve, cmd_sweep_fig6, write_csv
from .compete import COMPETE_COLUMNS, run_compete, trial_policies
from .config import CompeteConfig, ExperimentConfig, SweepConfig, UnitScale
from .sweep import SWEEP_COLUMNS, SweepJob, resolve_workers, run_sweep_fig6, run_sweep_job

__all__ = [
    "UnitScale",
    "SweepConfig",
    "CompeteConfig",
    "ExperimentConfig",
    "SweepJob",
    "SWEEP_COLUMNS",
    "resolve_workers",
    "run_sweep_job",
    "run_sweep_fig6",
    "COMPETE_COLUMNS",
    "trial_policies",
    "run_compete",
    "cmd_solve",
    "cmd_simulate",
    "cmd_sweep_fig6",
    "cmd_compete",
    "write_csv",
]
