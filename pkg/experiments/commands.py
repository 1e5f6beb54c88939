"""
Implementations of the command-line subcommands.

Each command takes the parsed argparse namespace, writes its artifacts and
returns an exit code. Exceptions propagate to main.py, which maps them to
exit codes.
"""

import json
import logging
from argparse import Namespace
from pathlib import Path
from typing import Union

import pandas as pd

from offline import dump_dp_trace, solve_offline, solve_saps
from online import PolicyKind, parse_policy
from schema.io import cost_to_dict, load_problem, save_schedule, schedule_to_dict, write_json
from simulation import simulate
from utils import get_results_path

from .compete import run_compete
from .config import ExperimentConfig
from .sweep import run_sweep_fig6

logger = logging.getLogger(__name__)

# Fixed float format keeps reruns byte-identical
CSV_FLOAT_FORMAT = "%.10g"


def cmd_solve(args: Namespace) -> int:
    instance, params = load_problem(args.instance)
    schedule, cost = solve_offline(instance, params)

    if args.out:
        save_schedule(args.out, schedule)
        logger.info("Schedule written to %s", args.out)
    if args.dp_trace or logger.isEnabledFor(logging.DEBUG):
        rows = dump_dp_trace(solve_saps(instance, params))
        for row in rows:
            logger.debug("DP node %s", row)
        if args.dp_trace:
            write_json(args.dp_trace, rows)
            logger.info("DP trace written to %s", args.dp_trace)

    _print_json({**schedule_to_dict(schedule), "cost": cost_to_dict(cost)})
    return 0


def cmd_simulate(args: Namespace) -> int:
    instance, params = load_problem(args.instance)
    policy = parse_policy(args.policy, params)
    trace = simulate(instance, params, policy)
    _, optimal = solve_offline(instance, params)

    if args.out:
        write_json(args.out, trace.to_dict())
        logger.info("Trace written to %s", args.out)

    ratio = trace.cost.total / optimal.total if optimal.total > 0 else 1.0
    _print_json(
        {
            "policy": trace.label,
            "total": trace.cost.total,
            "optimal": optimal.total,
            "ratio": ratio,
            "cost": cost_to_dict(trace.cost),
        }
    )
    return 0


def cmd_sweep_fig6(args: Namespace) -> int:
    overrides = {
        "tick_ms": args.tick_ms,
        "n_tasks": args.n,
        "gaps_ms": args.gaps,
        "c_wake": args.cw,
        "seed": args.seed,
    }
    config = ExperimentConfig.from_settings(
        sweep_overrides=overrides, workers=args.workers, progress=not args.quiet
    )
    df = run_sweep_fig6(config.sweep, workers=config.workers, progress=config.progress)

    out = args.out or get_results_path("sweep_fig6.csv")
    write_csv(df, out)
    logger.info("Sweep with %d rows written to %s", len(df), out)

    summary = df.groupby("c_wake_mJ")["ratio"].min()
    for c_wake, ratio in summary.items():
        print(f"c_wake={c_wake:g}: min ratio {ratio:.4f}")
    return 0


def cmd_compete(args: Namespace) -> int:
    kind = PolicyKind(args.policy)
    overrides = {"n_tasks": args.n, "trials": args.trials, "seed": args.seed}
    config = ExperimentConfig.from_settings(
        compete_overrides=overrides, progress=not args.quiet
    )
    df = run_compete(kind, config.compete, progress=config.progress)

    out = args.out or get_results_path(f"compete_{kind.value}.csv")
    write_csv(df, out)
    logger.info("Compete result written to %s", out)

    _print_json(df.iloc[0].to_dict())
    return 0


def write_csv(df: pd.DataFrame, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)


def _print_json(document: dict) -> None:
    print(json.dumps(document, indent=2, default=_json_default))


def _json_default(value):
    # numpy scalars from pandas rows
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")
