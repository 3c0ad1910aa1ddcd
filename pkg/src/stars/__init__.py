# src/stars/__init__.py

from .factor import (
    StarFactor,
    max_min_star_size,
    star_size_lower_bound,
    validate_star_factor,
)

__all__ = [
    "StarFactor",
    "max_min_star_size",
    "star_size_lower_bound",
    "validate_star_factor",
]
