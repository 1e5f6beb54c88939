import os
from typing import Dict, Optional

import yaml

from utils import get_settings_path

SETTINGS_FILES = {
    "experiments": "experiments.yml",
}


def get_settings(
    settings_type: str = "experiments", settings_dir: Optional[str] = None
) -> Dict:
    """
    Load a settings file.

    Args:
        settings_type: Which settings to load; only "experiments" exists.
        settings_dir: Directory containing the YAML files.
                     If None, uses the project's settings directory.

    Returns:
        Dict: The parsed YAML document ({} for an empty file).

    Raises:
        FileNotFoundError: If the settings file doesn't exist
        yaml.YAMLError: If the YAML file is malformed
        ValueError: For an unknown settings_type
    """
    if settings_type not in SETTINGS_FILES:
        raise ValueError(
            f"Unknown settings_type: {settings_type}. "
            f"Use one of: {', '.join(SETTINGS_FILES)}"
        )
    filename = SETTINGS_FILES[settings_type]

    if settings_dir is None:
        filepath = get_settings_path(filename)
    else:
        filepath = os.path.join(settings_dir, filename)

    if not os.path.exists(filepath):
        raise FileNotFoundError(f"Settings file not found: {filepath}")

    with open(filepath, "r") as file:
        return yaml.safe_load(file) or {}


def get_sweep_settings(settings_dir: Optional[str] = None) -> Dict:
    """Convenience function to load only the sweep-fig6 defaults."""
    return get_settings(settings_dir=settings_dir).get("sweep_fig6", {})


def get_compete_settings(settings_dir: Optional[str] = None) -> Dict:
    """Convenience function to load only the compete defaults."""
    return get_settings(settings_dir=settings_dir).get("compete", {})
