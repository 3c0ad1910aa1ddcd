# src/models/__init__.py

"""
Data models for the internal degree laboratory.

Defines Pydantic models for inputs, role labels, solver results and reports.
"""

from .inputs import (
    Command,
    CounterexampleParams,
    GraphSource,
    RunConfig,
    SearchBudget,
    SolveMode,
    StarBoundParams,
)  # Defined in inputs.py
from .outputs import (
    BudgetUsage,
    CertificateReport,
    CountResult,
    DecisionResult,
    EnumerationSummary,
    MaxLeafResult,
    MMIDResult,
    Report,
    Star,
    StarBoundComparison,
    StarFactorCheck,
    StarFactorResult,
    TreeProfile,
    Verdict,
    VerificationResult,
    VerificationVerdict,
)  # Defined in outputs.py
from .roles import Role, RoleLabels  # Defined in roles.py

# Public API for the models package
__all__ = [
    "BudgetUsage",
    "CertificateReport",
    "Command",
    "CountResult",
    "CounterexampleParams",
    "DecisionResult",
    "EnumerationSummary",
    "GraphSource",
    "MaxLeafResult",
    "MMIDResult",
    "Report",
    "Role",
    "RoleLabels",
    "RunConfig",
    "SearchBudget",
    "SolveMode",
    "Star",
    "StarBoundComparison",
    "StarBoundParams",
    "StarFactorCheck",
    "StarFactorResult",
    "TreeProfile",
    "Verdict",
    "VerificationResult",
    "VerificationVerdict",
]
