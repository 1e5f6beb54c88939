"""
Randomized sleep threshold of the ski-rental controller.

X has density f(x) = e^(x/tau) / (tau (e - 1)) on [0, tau] with tau = C_W/C_I,
so F(x) = (e^(x/tau) - 1) / (e - 1) and F^-1(u) = tau ln(1 + u (e - 1)).
Functions accept scalars or numpy arrays.
"""

import math

import numpy as np

from schema import SystemParams


def _tau(params: SystemParams) -> float:
    return params.c_wake / params.c_idle


def theta_pdf(x, params: SystemParams):
    tau = _tau(params)
    x = np.asarray(x, dtype=float)
    inside = (x >= 0) & (x <= tau)
    return np.where(inside, np.exp(x / tau) / (tau * (math.e - 1.0)), 0.0)


def theta_cdf(x, params: SystemParams):
    tau = _tau(params)
    x = np.clip(np.asarray(x, dtype=float), 0.0, tau)
    return np.expm1(x / tau) / (math.e - 1.0)


def sample_theta(u, params: SystemParams):
    """
    Inverse-CDF sample of the randomized threshold.

    Examples (tau = 10):
        u = 0   -> 0
        u = 1   -> 10
        u = 0.5 -> 6.2011...
    """
    result = _tau(params) * np.log1p(np.asarray(u, dtype=float) * math.expm1(1.0))
    return float(result) if np.ndim(result) == 0 else result
