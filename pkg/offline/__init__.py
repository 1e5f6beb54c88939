from .dp import DpNode, DpSolution, NodeKind, solve_sap
from .saps import SapRange, decompose_saps
from .solve import solve_offline, solve_saps
from .trace import dump_dp_trace
from .traceback import traceback

__all__ = [
    "SapRange",
    "decompose_saps",
    "NodeKind",
    "DpNode",
    "DpSolution",
    "solve_sap",
    "traceback",
    "solve_saps",
    "solve_offline",
    "dump_dp_trace",
]
