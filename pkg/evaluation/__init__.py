"""
Exact evaluation of candidate schedules.

Parameter validation, the per-window feasibility test, FIFO departure
computation and the objective of the ON-OFF control problem.
"""

from .costs import evaluate_schedule
from .departures import compute_departures
from .feasibility import check_feasibility, ensure_feasible, find_violating_window
from .validation import validate_params

__all__ = [
    "validate_params",
    "check_feasibility",
    "ensure_feasible",
    "find_violating_window",
    "compute_departures",
    "evaluate_schedule",
]
