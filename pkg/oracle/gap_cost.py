import math

import numpy as np
from scipy.integrate import trapezoid

from online import PolicyKind, SleepPolicy
from schema import SystemParams

QUADRATURE_POINTS = 10_001


def expected_online_gap_cost(
    y: float,
    policy: SleepPolicy,
    params: SystemParams,
    n_points: int = QUADRATURE_POINTS,
) -> float:
    """
    Expected cost an on-line controller pays for one idle gap of length y.

    The controller idles for its threshold and then sleeps, paying C_W for the
    next wake-up; if the next task arrives first it has only idled.

        deterministic(theta): C_I * y if y <= theta else C_I * theta + C_W
        randomized:           integral_0^m (C_I x + C_W) f(x) dx + C_I y (1 - F(m)),
                              m = min(y, tau), tau = C_W / C_I

    The randomized integral uses the composite trapezoid rule on n_points nodes
    with the threshold density written out here, independently of the
    sampler in the online package.

    Examples (C_W=10, C_I=1):
        deterministic(10), y = 15 -> 20
        randomized, y >= 10       -> e / (e - 1) * 10
        any policy, y = 0         -> 0
    """
    if y < 0:
        raise ValueError(f"gap length must be nonnegative, got {y}")
    if y == 0:
        return 0.0

    if policy.kind is PolicyKind.NAIVE:
        return params.c_wake
    if policy.kind is PolicyKind.DETERMINISTIC:
        if y <= policy.theta:
            return params.c_idle * y
        return params.c_idle * policy.theta + params.c_wake

    tau = params.c_wake / params.c_idle
    upper = min(y, tau)
    x = np.linspace(0.0, upper, n_points)
    density = np.exp(x / tau) / (tau * (math.e - 1.0))
    integral = trapezoid((params.c_idle * x + params.c_wake) * density, x)
    survival = 1.0 - math.expm1(upper / tau) / (math.e - 1.0)
    return float(integral + params.c_idle * y * survival)
