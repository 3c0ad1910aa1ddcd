# src/__init__.py

"""
Source package for the internal degree laboratory.

Graph core, builders, spanning-tree and star-factor solvers, and the CLI
with its verify workflow reside here.
"""

__version__ = "1.0.0"

# No high-level imports are needed here, as components are accessed via their
# specific sub-modules (e.g., src.core, src.engine, src.stars).
