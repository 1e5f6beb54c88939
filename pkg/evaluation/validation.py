import math

from schema import InvalidParams, SystemParams


def validate_params(
    params: SystemParams, require_positive_idle: bool = False
) -> SystemParams:
    """
    Check every SystemParams invariant and return the parameters unchanged.

    Args:
        params: Parameters to check.
        require_positive_idle: Also demand C_I > 0, needed by operations that
            divide by C_I (sleep threshold, randomized threshold sampling,
            competitive analysis).

    Returns:
        SystemParams: The same object, so calls can be chained.

    Raises:
        InvalidParams: For the first violated invariant.

    Examples:
        validate_params(SystemParams(1, 10, 10, 1, 1))  -> ok
        validate_params(SystemParams(1, 1, 10, 1, 1))   -> InvalidParams (d // beta = 1)
        validate_params(SystemParams(1, 10, 10, 1, 2))  -> InvalidParams (C_I > C_B)
    """
    if not isinstance(params.beta, int) or not isinstance(params.d, int):
        raise InvalidParams("beta and d must be integer ticks")
    if params.beta < 1:
        raise InvalidParams(f"beta must be at least 1 tick, got {params.beta}")
    if params.d < params.beta:
        raise InvalidParams(f"deadline d={params.d} is shorter than beta={params.beta}")
    if params.d // params.beta <= 1:
        raise InvalidParams(
            f"floor(d/beta) must exceed 1, got floor({params.d}/{params.beta}) = "
            f"{params.d // params.beta}"
        )

    for name in ("c_wake", "c_busy", "c_idle"):
        value = getattr(params, name)
        if not math.isfinite(value) or value < 0:
            raise InvalidParams(f"{name} must be a finite nonnegative cost, got {value}")

    if params.c_idle > params.c_busy:
        raise InvalidParams(
            f"idle cost C_I={params.c_idle} exceeds busy cost C_B={params.c_busy}"
        )
    if require_positive_idle and params.c_idle == 0:
        raise InvalidParams("C_I must be positive when the sleep threshold C_W/C_I is used")

    return params
