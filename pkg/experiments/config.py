"""
Typed experiment configurations built from settings/experiments.yml.

Physical units appear only here: durations in ms become ticks and powers in
mW become per-tick costs. Everything downstream works on SystemParams.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

from schema import SystemParams
from settings import get_compete_settings, get_sweep_settings


@dataclass(frozen=True)
class UnitScale:
    """
    Binding of ticks to milliseconds.

    Attributes:
        tick_ms: Length of one tick in ms.
    """

    tick_ms: float = 0.1

    def __post_init__(self) -> None:
        if not self.tick_ms > 0:
            raise ValueError(f"tick_ms must be positive, got {self.tick_ms}")

    def ticks(self, duration_ms: float) -> int:
        """Duration in ms rounded to whole ticks."""
        return int(round(duration_ms / self.tick_ms))

    def per_tick_cost(self, power_mw: float) -> float:
        """Energy of one tick at the given power, in mW * ms."""
        return power_mw * self.tick_ms


@dataclass(frozen=True)
class SweepConfig:
    """
    Off-line optimum versus naive controller over a range of maximum gaps.

    One random instance is drawn per gap and shared by every c_wake curve.
    """

    tick_ms: float = 0.1
    beta_ms: float = 1.0
    deadline_ms: float = 20.0
    c_busy_mw: float = 30.0
    c_idle_mw: float = 0.1
    n_tasks: int = 1000
    gaps_ms: tuple[int, int] = (1, 100)
    c_wake: tuple[float, ...] = (1.0, 7.0, 14.0, 28.0)
    seed: int = 2024

    def __post_init__(self) -> None:
        low, high = self.gaps_ms
        if not 0 < low <= high:
            raise ValueError(f"gaps_ms must be a non-empty positive range, got {self.gaps_ms}")
        if not self.c_wake:
            raise ValueError("c_wake must list at least one wake-up cost")

    @classmethod
    def from_settings(cls, settings: Optional[dict] = None, **overrides) -> "SweepConfig":
        settings = dict(get_sweep_settings() if settings is None else settings)
        settings.update({key: value for key, value in overrides.items() if value is not None})
        if "gaps_ms" in settings:
            settings["gaps_ms"] = tuple(int(g) for g in settings["gaps_ms"])
        if "c_wake" in settings:
            settings["c_wake"] = tuple(float(c) for c in settings["c_wake"])
        return cls(**settings)

    @property
    def scale(self) -> UnitScale:
        return UnitScale(self.tick_ms)

    def gap_values_ms(self) -> list[int]:
        low, high = self.gaps_ms
        return list(range(low, high + 1))

    def params_for(self, c_wake: float) -> SystemParams:
        scale = self.scale
        return SystemParams(
            beta=scale.ticks(self.beta_ms),
            d=scale.ticks(self.deadline_ms),
            c_wake=float(c_wake),
            c_busy=scale.per_tick_cost(self.c_busy_mw),
            c_idle=scale.per_tick_cost(self.c_idle_mw),
        )


@dataclass(frozen=True)
class CompeteConfig:
    """
    On-line policy against the evenly spaced worst-case instance.

    All values are ticks and cost-units; no unit binding is involved.
    """

    beta: int = 1
    deadline: int = 10
    c_wake: float = 10.0
    c_busy: float = 1.0
    c_idle: float = 1.0
    n_tasks: int = 1000
    trials: int = 200
    seed: int = 7
    gap_margin: int = 80

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if self.n_tasks < 1:
            raise ValueError(f"n_tasks must be at least 1, got {self.n_tasks}")

    @classmethod
    def from_settings(cls, settings: Optional[dict] = None, **overrides) -> "CompeteConfig":
        settings = dict(get_compete_settings() if settings is None else settings)
        settings.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**settings)

    @property
    def params(self) -> SystemParams:
        return SystemParams(
            beta=int(self.beta),
            d=int(self.deadline),
            c_wake=float(self.c_wake),
            c_busy=float(self.c_busy),
            c_idle=float(self.c_idle),
        )

    def adversarial_gap(self, theta: float) -> int:
        """Arrival spacing beyond the deadline, theta and C_W/C_I."""
        tau = self.params.sleep_threshold
        reach = max(theta, tau)
        if not math.isfinite(reach):
            raise ValueError("adversarial gap needs a finite threshold (C_I > 0)")
        return int(self.deadline + math.ceil(reach) + self.gap_margin)


@dataclass(frozen=True)
class ExperimentConfig:
    """Both experiment configurations plus the shared run options."""

    sweep: SweepConfig = field(default_factory=SweepConfig)
    compete: CompeteConfig = field(default_factory=CompeteConfig)
    workers: int = 1
    progress: bool = True

    @classmethod
    def from_settings(
        cls,
        sweep_overrides: Optional[dict] = None,
        compete_overrides: Optional[dict] = None,
        **options,
    ) -> "ExperimentConfig":
        """YAML defaults with command-line overrides; None values are ignored."""
        return cls(
            sweep=SweepConfig.from_settings(**(sweep_overrides or {})),
            compete=CompeteConfig.from_settings(**(compete_overrides or {})),
            **options,
        )
