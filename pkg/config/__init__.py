"""
Configuration module for the internal degree laboratory.

This module contains:
- settings.py: Environment configuration and solver defaults
"""

from config.settings import Settings, get_settings

__all__ = ["Settings", "get_settings"]
