from .offline import critical_offset, optimal_ap_start
from .online import WakeupState, online_wakeup_update, start_wakeup

__all__ = [
    "optimal_ap_start",
    "critical_offset",
    "WakeupState",
    "start_wakeup",
    "online_wakeup_update",
]
