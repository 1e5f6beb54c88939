from .controllers import BaseController, OnlineController, ReplayController
from .engine import ServerState, Simulator, replay_schedule, simulate
from .events import EventKind, EventQueue, SimEvent
from .generators import GenConfig, adversarial_instance, generate_instance
from .trace import DeadlineMissRecord, SimTrace

__all__ = [
    "EventKind",
    "SimEvent",
    "EventQueue",
    "SimTrace",
    "DeadlineMissRecord",
    "BaseController",
    "OnlineController",
    "ReplayController",
    "ServerState",
    "Simulator",
    "simulate",
    "replay_schedule",
    "GenConfig",
    "generate_instance",
    "adversarial_instance",
]
