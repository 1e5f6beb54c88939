import logging

from evaluation import ensure_feasible, evaluate_schedule, validate_params
from schema import ArrivalInstance, CostBreakdown, Schedule, SystemParams

from .dp import DpSolution, solve_sap
from .saps import decompose_saps
from .traceback import traceback

logger = logging.getLogger(__name__)

# Relative slack between the summed DP roots and the realized schedule cost
CONSISTENCY_TOLERANCE = 1e-9


def solve_saps(instance: ArrivalInstance, params: SystemParams) -> list[DpSolution]:
    """Decompose into SAPs and solve each one; SAPs are independent."""
    return [solve_sap(instance, params, sap) for sap in decompose_saps(instance, params)]


def solve_offline(
    instance: ArrivalInstance, params: SystemParams
) -> tuple[Schedule, CostBreakdown]:
    """
    Optimal off-line ON-OFF schedule of a whole instance.

    Splits the instance into SAPs, solves each by dynamic programming,
    concatenates the traced-back schedules and evaluates the result exactly.

    Args:
        instance: Arrival times (any N, including 0).
        params: System parameters.

    Returns:
        tuple: (Schedule, CostBreakdown) with total equal to the sum of the SAP
            optimal costs.

    Raises:
        InvalidParams: If the parameters violate their invariants.
        InfeasibleInstance: If some window of d ticks holds too many arrivals.

    Examples (beta=1, d=10, C_W=10, C_B=C_I=1):
        arrivals [0, 19, 29] -> total 23
        arrivals [0, 25]     -> total 22
        arrivals []          -> empty schedule, total 0
    """
    validate_params(params)
    ensure_feasible(instance, params)

    if instance.n_tasks == 0:
        return Schedule(), CostBreakdown.empty()

    solutions = solve_saps(instance, params)
    schedule = Schedule(
        tuple(ap for solution in solutions for ap in traceback(instance, params, solution))
    )

    cost = evaluate_schedule(instance, params, schedule)
    expected = sum(solution.value for solution in solutions)
    assert abs(cost.total - expected) <= CONSISTENCY_TOLERANCE * max(1.0, abs(expected)), (
        f"traced-back schedule costs {cost.total}, DP promised {expected}"
    )

    logger.info(
        "Off-line optimum: %d tasks, %d SAPs, %d APs, cost %g",
        instance.n_tasks,
        len(solutions),
        schedule.n_wakeups,
        cost.total,
    )
    return schedule, cost
