from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from schema import SystemParams


class PolicyKind(str, Enum):
    DETERMINISTIC = "det"
    RANDOMIZED = "rand"
    NAIVE = "naive"


@dataclass(frozen=True)
class SleepPolicy:
    """
    How long an on-line controller idles at a decision point before sleeping.

    - Deterministic(theta): always idle theta ticks.
    - Randomized(seed): idle a fresh draw of the ski-rental threshold X on
      [0, C_W/C_I]; the draw at decision point i comes from its own stream
      seeded by (seed, i), so draws never depend on evaluation order.
    - Naive: sleep as soon as the backlog is empty and wake on every arrival.
    """

    kind: PolicyKind
    theta: Optional[float] = None
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind is PolicyKind.DETERMINISTIC:
            if self.theta is None or self.theta < 0:
                raise ValueError(f"deterministic threshold must be >= 0, got {self.theta}")
        if self.kind is PolicyKind.RANDOMIZED and self.seed is None:
            raise ValueError("randomized policy needs a seed")

    @classmethod
    def deterministic(cls, theta: float) -> "SleepPolicy":
        return cls(PolicyKind.DETERMINISTIC, theta=float(theta))

    @classmethod
    def randomized(cls, seed: int) -> "SleepPolicy":
        return cls(PolicyKind.RANDOMIZED, seed=int(seed))

    @classmethod
    def naive(cls) -> "SleepPolicy":
        return cls(PolicyKind.NAIVE, theta=0.0)

    @property
    def wakes_on_arrival(self) -> bool:
        """Naive wakes immediately instead of using the latest-start mechanism."""
        return self.kind is PolicyKind.NAIVE

    def uniform_draw(self, decision_index: int) -> float:
        """Uniform (0, 1) draw of one decision point's independent stream."""
        rng = np.random.default_rng([self.seed, decision_index])
        return float(rng.random())

    @property
    def label(self) -> str:
        if self.kind is PolicyKind.DETERMINISTIC:
            return f"det:{self.theta:g}"
        if self.kind is PolicyKind.RANDOMIZED:
            return f"rand:{self.seed}"
        return "naive"


def _parse_deterministic(argument: Optional[str], params: Optional[SystemParams]) -> SleepPolicy:
    if argument:
        return SleepPolicy.deterministic(float(argument))
    if params is None:
        raise ValueError("'det' without a threshold needs system parameters for C_W/C_I")
    return SleepPolicy.deterministic(params.sleep_threshold)


def _parse_randomized(argument: Optional[str], params: Optional[SystemParams]) -> SleepPolicy:
    return SleepPolicy.randomized(int(argument) if argument else 0)


def _parse_naive(argument: Optional[str], params: Optional[SystemParams]) -> SleepPolicy:
    if argument:
        raise ValueError("'naive' takes no argument")
    return SleepPolicy.naive()


POLICY_REGISTRY = {
    PolicyKind.NAIVE.value: _parse_naive,
    PolicyKind.DETERMINISTIC.value: _parse_deterministic,
    PolicyKind.RANDOMIZED.value: _parse_randomized,
}


def parse_policy(text: str, params: Optional[SystemParams] = None) -> SleepPolicy:
    """
    Build a policy from its command-line form.

    Formats: "naive", "det:<theta>", "det" (theta = C_W/C_I), "rand:<seed>",
    "rand" (seed 0).

    Raises:
        ValueError: For unknown policy names or malformed arguments.
    """
    name, _, argument = text.partition(":")
    name = name.strip().lower()
    if name not in POLICY_REGISTRY:
        raise ValueError(
            f"Unknown policy '{text}'. Use one of: {', '.join(sorted(POLICY_REGISTRY))}"
        )
    return POLICY_REGISTRY[name](argument.strip() or None, params)
