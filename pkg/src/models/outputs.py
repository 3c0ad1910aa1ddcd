# src/models/outputs.py

"""
Pydantic models for intermediate and final system outputs.

Counts are carried as decimal strings wherever they leave the process so
that JSON consumers never round them; verdicts are tri-state.
"""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

EdgeList = list[tuple[int, int]]


class Verdict(str, Enum):
    """Tri-state answer of a decision procedure."""

    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"

    @classmethod
    def of(cls, value: bool) -> "Verdict":
        return cls.TRUE if value else cls.FALSE


class VerificationVerdict(str, Enum):
    """Outcome of `verify` for the claim "every spanning tree has an internal vertex of degree 2"."""

    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED-FOR-THIS-GRAPH"
    INDETERMINATE = "INDETERMINATE"
    INCONSISTENT = "INTERNAL INCONSISTENCY"


# =============================================================================
# Spanning-tree engine
# =============================================================================


class TreeProfile(BaseModel):
    """Degree structure of one spanning tree."""

    model_config = ConfigDict(frozen=True)

    tree_degree: tuple[int, ...] = Field(description="Tree degree of each vertex.")
    leaves: tuple[int, ...] = Field(description="Vertices of tree degree 1, ascending.")
    internals: tuple[int, ...] = Field(description="Vertices of tree degree >= 2, ascending.")
    min_internal_degree: Optional[int] = Field(
        default=None, description="Minimum degree over internal vertices; None if there are none."
    )

    @property
    def has_internal(self) -> bool:
        return self.min_internal_degree is not None

    @property
    def degree_two_internals(self) -> list[int]:
        return [v for v in self.internals if self.tree_degree[v] == 2]


class BudgetUsage(BaseModel):
    """Resources consumed by a search, and the limit hit if it was cut short."""

    nodes_explored: int = 0
    elapsed_seconds: float = 0.0
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    exhausted: Optional[str] = Field(
        default=None, description="'nodes' or 'time' when the budget ran out."
    )


class EnumerationSummary(BaseModel):
    """Result of a full (or visitor-stopped) spanning-tree enumeration."""

    trees: int = Field(description="Trees visited.")
    completed: bool = Field(description="True iff every spanning tree was visited.")
    stopped: bool = Field(default=False, description="True iff a visitor asked to stop.")
    stop_witness: Optional[EdgeList] = Field(
        default=None, description="Tree on which the visitor stopped."
    )
    usage: BudgetUsage = Field(default_factory=BudgetUsage)


class DecisionResult(BaseModel):
    """Answer to: is there a spanning tree whose internal vertices all have degree >= k?"""

    k: int
    verdict: Verdict
    witness: Optional[EdgeList] = None
    usage: BudgetUsage = Field(default_factory=BudgetUsage)

    @computed_field
    @property
    def exhaustive(self) -> bool:
        return self.verdict != Verdict.INDETERMINATE


class MMIDResult(BaseModel):
    """Maximum over spanning trees of the minimum internal degree."""

    value: Optional[int] = Field(description="Optimum, or None when no tree has an internal vertex.")
    witness: EdgeList = Field(description="Spanning tree attaining the value.")
    exhaustive: bool = Field(description="True iff optimality is proven.")
    decisions: list[DecisionResult] = Field(default_factory=list)
    usage: BudgetUsage = Field(default_factory=BudgetUsage)


class CertificateReport(BaseModel):
    """Step-by-step replay of the counterexample argument on one spanning tree."""

    forced_bridges_present: bool
    core_vertices_internal: bool
    induced_core_edges: EdgeList
    induced_core_is_tree: bool
    witness_leaf: Optional[int] = None
    witness_degree: Optional[int] = None
    witness_is_internal: bool = False

    @computed_field
    @property
    def passed(self) -> bool:
        return (
            self.forced_bridges_present
            and self.core_vertices_internal
            and self.induced_core_is_tree
            and self.witness_is_internal
            and self.witness_degree == 2
        )


class MaxLeafResult(BaseModel):
    """Spanning tree from the max-leaf greedy and its leaf statistics."""

    tree: EdgeList
    leaf_count: int
    vertex_count: int

    @computed_field
    @property
    def leaf_fraction(self) -> float:
        return self.leaf_count / self.vertex_count if self.vertex_count else 0.0


class CountResult(BaseModel):
    """Exact spanning-tree count."""

    spanning_trees: str = Field(description="Decimal string of the exact count.")
    method: str = "bareiss-laplacian-minor"


# =============================================================================
# Star factors
# =============================================================================


class Star(BaseModel):
    """One star of a factor in canonical form."""

    model_config = ConfigDict(frozen=True)

    center: int
    leaves: tuple[int, ...]


class StarFactorCheck(BaseModel):
    """Validation outcome of a proposed star factor."""

    valid: bool
    min_star_size: Optional[int] = None
    violation: Optional[str] = None


class StarFactorResult(BaseModel):
    """Largest s such that a star factor with all stars of >= s edges exists."""

    value: Optional[int] = None
    witness: list[Star] = Field(default_factory=list)
    verdict: Verdict = Verdict.TRUE
    usage: BudgetUsage = Field(default_factory=BudgetUsage)

    @computed_field
    @property
    def exhaustive(self) -> bool:
        return self.verdict != Verdict.INDETERMINATE


class StarBoundComparison(BaseModel):
    """Exact optimum next to the lower-bound formula for a chosen c."""

    min_degree: int
    c: float
    bound: Optional[float] = None
    log_base: str = "natural"
    optimum: Optional[int] = None


# =============================================================================
# Verification & reports
# =============================================================================


class VerificationResult(BaseModel):
    """Per-method verdicts on the degree-2 claim and the combined outcome."""

    verdict: VerificationVerdict
    agree: bool
    spanning_trees: str
    methods: dict[str, Verdict] = Field(default_factory=dict)
    trees_enumerated: Optional[str] = None
    trees_with_degree_two_internal: Optional[str] = None
    certificates_checked: int = 0
    certificates_passed: int = 0
    hist_witness: Optional[EdgeList] = None
    bridges: EdgeList = Field(default_factory=list)
    min_degree: Optional[int] = None
    decision: Optional[DecisionResult] = None
    errors: list[str] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)
    steps_completed: list[str] = Field(default_factory=list)


class Report(BaseModel):
    """Machine-readable record of one CLI run."""

    tool_version: str
    fingerprint: str = Field(description="graph6 string of the input graph.")
    command: dict[str, Any] = Field(description="Echo of the resolved run configuration.")
    status: str = Field(description="ok, indeterminate, refuted, or inconsistent.")
    results: dict[str, Any] = Field(default_factory=dict)
    wall_time_seconds: Optional[float] = None
