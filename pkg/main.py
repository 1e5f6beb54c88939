"""
Command-line entry point.

    python main.py solve instance.json --out schedule.json
    python main.py simulate instance.json --policy det:10
    python main.py sweep-fig6 --gaps 1 100 --cw 1 7 14 28 --out sweep.csv
    python main.py compete --policy rand --n 1000 --trials 200

Exit codes: 0 ok, 1 file or input errors, 2 infeasible instance.
"""

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from experiments import cmd_compete, cmd_simulate, cmd_solve, cmd_sweep_fig6
from schema import InfeasibleInstance, InstanceFormatError, InvalidParams
from utils import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INFEASIBLE = 2

COMMANDS = {
    "solve": cmd_solve,
    "simulate": cmd_simulate,
    "sweep-fig6": cmd_sweep_fig6,
    "compete": cmd_compete,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onoff", description="Optimal and on-line ON-OFF scheduling of deadline tasks"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug output"
    )
    parser.add_argument("--quiet", action="store_true", help="disable progress bars")
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", help="optimal off-line schedule of an instance")
    solve.add_argument("instance", help="instance JSON file")
    solve.add_argument("--out", help="write the schedule JSON here")
    solve.add_argument("--dp-trace", help="write the per-task DP values here")

    simulate = subparsers.add_parser("simulate", help="run an on-line policy on an instance")
    simulate.add_argument("instance", help="instance JSON file")
    simulate.add_argument(
        "--policy", default="det", help="naive, det[:theta] or rand[:seed] (default: det)"
    )
    simulate.add_argument("--out", help="write the simulation trace JSON here")

    sweep = subparsers.add_parser("sweep-fig6", help="optimal vs naive over maximum gaps")
    sweep.add_argument("--gaps", nargs=2, type=int, metavar=("LO", "HI"), help="gap range in ms")
    sweep.add_argument("--n", type=int, help="tasks per instance")
    sweep.add_argument("--cw", nargs="+", type=float, help="wake-up costs, one curve each")
    sweep.add_argument("--tick-ms", type=float, help="length of one tick in ms")
    sweep.add_argument("--seed", type=int, help="base seed")
    sweep.add_argument("--workers", type=int, help="worker processes (default: ONOFF_THREADS)")
    sweep.add_argument("--out", help="CSV output path")

    compete = subparsers.add_parser("compete", help="empirical competitive ratio")
    compete.add_argument("--policy", choices=["det", "rand"], default="det")
    compete.add_argument("--n", type=int, help="number of tasks")
    compete.add_argument("--trials", type=int, help="randomized trials")
    compete.add_argument("--seed", type=int, help="base seed")
    compete.add_argument("--out", help="CSV output path")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        return COMMANDS[args.command](args)
    except InfeasibleInstance as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (OSError, json.JSONDecodeError, InstanceFormatError, InvalidParams, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
