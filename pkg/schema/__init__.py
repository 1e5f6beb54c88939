from .costs import CostBreakdown
from .errors import (
    ArrivalAfterWake,
    DeadlineMiss,
    GenerationStalled,
    InfeasibleInstance,
    InstanceFormatError,
    InvalidParams,
    NoFeasibleStart,
    OnOffError,
    ScheduleInfeasible,
    TooLarge,
)
from .instance import ArrivalInstance
from .params import SystemParams
from .schedule import TIME_TOLERANCE, ActivePeriod, DepartureVector, Schedule
