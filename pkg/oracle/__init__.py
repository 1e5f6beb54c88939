"""
Independent ground truth for tests and acceptance runs.

Nothing here is used by the solvers: the brute force enumerates every split of
the tasks into APs with grid-searched start times, and the gap cost is
obtained by quadrature rather than closed form.
"""

from .brute_force import brute_force_optimal
from .gap_cost import expected_online_gap_cost
from .latest_start import latest_feasible_start_grid
from .partitions import PartitionEnumeration

__all__ = [
    "PartitionEnumeration",
    "latest_feasible_start_grid",
    "brute_force_optimal",
    "expected_online_gap_cost",
]
