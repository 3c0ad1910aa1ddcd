from typing import List, Optional, TypedDict

from src.core.graph import Graph
from src.models.inputs import SearchBudget
from src.models.outputs import DecisionResult, EdgeList, Verdict, VerificationResult
from src.models.roles import RoleLabels

# =============================================================================
# State Definition
# =============================================================================


class VerificationState(TypedDict):
    """
    The state object for the verify workflow.
    It tracks the input graph, per-method evidence, and metadata across the run.
    """

    # ------------------------------------
    # 1. Input
    # ------------------------------------
    graph: Graph
    labels: Optional[RoleLabels]
    budget: SearchBudget
    workers: int
    seed: int
    enumeration_threshold: int
    sample_size: int

    # ------------------------------------
    # 2. Inspection
    # ------------------------------------
    spanning_trees: Optional[int]
    min_degree: Optional[int]
    bridges: EdgeList

    # ------------------------------------
    # 3. Enumeration (small graphs)
    # ------------------------------------
    trees_enumerated: Optional[int]
    trees_with_degree_two_internal: Optional[int]
    tree_without_degree_two: Optional[EdgeList]

    # ------------------------------------
    # 4. Decision (k = 3)
    # ------------------------------------
    decision: Optional[DecisionResult]

    # ------------------------------------
    # 5. Certificates
    # ------------------------------------
    certificates_checked: int
    certificates_passed: int

    # ------------------------------------
    # 6. Verdict
    # ------------------------------------
    methods: dict[str, Verdict]
    result: Optional[VerificationResult]

    # ------------------------------------
    # 7. Metadata
    # ------------------------------------
    errors: List[str]
    warnings: List[str]
    steps_completed: List[str]
