"""
Project-wide path utilities.

All paths are resolved relative to the project root, not relative to the
current working directory, so settings are found from tests, scripts and
any working directory alike.
"""

from pathlib import Path
from typing import Union


def get_project_root() -> Path:
    """
    Get the root directory of the project.

    This is the single source of truth for locating the project root.
    """
    # utils/paths.py -> utils -> project_root
    return Path(__file__).resolve().parent.parent


def get_settings_path(*path_parts: Union[str, Path]) -> Path:
    """Get path to settings files relative to project root."""
    return get_project_root() / "settings" / Path(*path_parts)


def get_results_path(*path_parts: Union[str, Path]) -> Path:
    """
    Get path to the default results directory relative to project root.

    Experiment commands write here when no --out is given.
    """
    return get_project_root() / "results" / Path(*path_parts)
