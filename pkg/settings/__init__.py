"""
Settings module for the ON-OFF scheduling experiments.

Provides access to the experiment defaults in experiments.yml.
"""

from .settings import get_compete_settings, get_settings, get_sweep_settings

__all__ = ["get_settings", "get_sweep_settings", "get_compete_settings"]
