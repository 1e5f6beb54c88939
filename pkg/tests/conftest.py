import json

import numpy as np
import pytest

from schema import ArrivalInstance, SystemParams
from simulation import GenConfig, generate_instance


@pytest.fixture
def unit_params() -> SystemParams:
    """beta=1, d=10, C_W=10, C_B=C_I=1: the worked-example parameters."""
    return SystemParams(beta=1, d=10, c_wake=10.0, c_busy=1.0, c_idle=1.0)


@pytest.fixture
def scenario_one() -> ArrivalInstance:
    return ArrivalInstance((0, 19))


@pytest.fixture
def scenario_two() -> ArrivalInstance:
    return ArrivalInstance((0, 19, 29))


@pytest.fixture
def instance_file(tmp_path):
    """Write an instance document and return its path."""

    def _write(arrivals, params: SystemParams, name: str = "instance.json"):
        path = tmp_path / name
        document = {
            "params": {
                "beta": params.beta,
                "d": params.d,
                "c_wake": params.c_wake,
                "c_busy": params.c_busy,
                "c_idle": params.c_idle,
            },
            "arrivals": list(arrivals),
        }
        path.write_text(json.dumps(document))
        return path

    return _write


def random_params(rng: np.random.Generator) -> SystemParams:
    """Random valid parameters: beta in {1, 2}, d in {5, 10, 20}, C_I <= C_B."""
    beta = int(rng.choice([1, 2]))
    d = int(rng.choice([5, 10, 20]))
    c_busy = float(rng.uniform(0.1, 5.0))
    c_idle = float(rng.uniform(0.05, 1.0) * c_busy)
    c_wake = float(rng.uniform(0.0, 30.0))
    return SystemParams(beta=beta, d=d, c_wake=c_wake, c_busy=c_busy, c_idle=c_idle)


def random_case(
    rng: np.random.Generator, max_tasks: int = 12
) -> tuple[ArrivalInstance, SystemParams]:
    """A random feasible instance with random parameters."""
    params = random_params(rng)
    n_tasks = int(rng.integers(1, max_tasks, endpoint=True))
    max_gap = int(rng.integers(1, 3 * params.d, endpoint=True))
    seed = int(rng.integers(0, 2**31))
    return generate_instance(GenConfig(n_tasks, max_gap, seed), params), params


@pytest.fixture
def case_factory():
    """Seeded stream of random feasible (instance, params) pairs."""

    def _cases(count: int, seed: int = 0, max_tasks: int = 12):
        rng = np.random.default_rng(seed)
        return [random_case(rng, max_tasks) for _ in range(count)]

    return _cases
