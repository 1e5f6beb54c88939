"""
Project-wide utilities.

Main modules:
- paths: Path resolution for settings and results
- logger: Logging setup shared by the command-line entry point
"""

from .logger import configure_logging
from .paths import get_project_root, get_results_path, get_settings_path

__all__ = [
    "get_project_root",
    "get_settings_path",
    "get_results_path",
    "configure_logging",
]
