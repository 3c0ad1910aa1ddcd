# src/utils/__init__.py

"""
Utility package for the internal degree laboratory.

Contains standalone, reusable helper modules:
- io: graph6 files, role-label sidecars and JSON reports (import from src.utils.io;
  it depends on the builders, which themselves log through this package).
- logger: Centralized logging configuration (structlog).
"""

from .logger import get_logger

# Public API for the utilities package
__all__ = ["get_logger"]
