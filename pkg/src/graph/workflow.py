from typing import Literal, Optional

from langgraph.graph import END, StateGraph

from config.settings import Settings
from src.core.graph import Graph
from src.graph.state import VerificationState
from src.models.inputs import SearchBudget
from src.models.outputs import VerificationResult
from src.models.roles import RoleLabels
from src.nodes.certificates import SampleCertificatesNode
from src.nodes.decision import DecideHistNode
from src.nodes.enumeration import EnumerateTreesNode
from src.nodes.inspection import InspectGraphNode
from src.nodes.verdict import AssembleVerdictNode
from src.utils.logger import get_logger

logger = get_logger("Workflow")


class VerificationWorkflow:
    """
    The orchestrator of `verify`, implemented using LangGraph.

    inspect_graph -> (enumerate_trees ->) decide_hist -> (sample_certificates ->) assemble_verdict
    """

    def __init__(self, settings: Settings):
        """
        Initializes the workflow with settings and builds the graph.
        """
        self.settings = settings
        self.graph = self._build_graph()

    # =========================================================================
    # Conditional Edges
    # =========================================================================

    def route_after_inspection(
        self, state: VerificationState
    ) -> Literal["enumerate", "decide", "verdict"]:
        """
        - Inspection failed: straight to the verdict.
        - Tree count within the threshold: enumerate every tree first.
        - Otherwise: the decision solver alone.
        """
        if state["errors"]:
            logger.error("Inspection failed. Proceeding to verdict.")
            return "verdict"
        if state["spanning_trees"] <= state["enumeration_threshold"]:
            logger.info(
                f"{state['spanning_trees']} trees within threshold "
                f"{state['enumeration_threshold']}. Enumerating."
            )
            return "enumerate"
        logger.info("Tree count above threshold. Skipping enumeration.")
        return "decide"

    def route_after_decision(self, state: VerificationState) -> Literal["sample", "verdict"]:
        """Sample certificates only for labelled graphs that were not enumerated."""
        if state["labels"] is not None and state["trees_enumerated"] is None:
            return "sample"
        return "verdict"

    # =========================================================================
    # Graph Builder
    # =========================================================================

    def _build_graph(self):
        """
        Builds the LangGraph StateGraph.
        """
        workflow = StateGraph(VerificationState)

        # 1. Add Nodes
        workflow.add_node("inspect_graph", InspectGraphNode(self.settings).execute)
        workflow.add_node("enumerate_trees", EnumerateTreesNode(self.settings).execute)
        workflow.add_node("decide_hist", DecideHistNode(self.settings).execute)
        workflow.add_node("sample_certificates", SampleCertificatesNode(self.settings).execute)
        workflow.add_node("assemble_verdict", AssembleVerdictNode(self.settings).execute)

        # 2. Set Edges
        workflow.set_entry_point("inspect_graph")
        workflow.add_conditional_edges(
            "inspect_graph",
            self.route_after_inspection,
            {
                "enumerate": "enumerate_trees",
                "decide": "decide_hist",
                "verdict": "assemble_verdict",
            },
        )
        workflow.add_edge("enumerate_trees", "decide_hist")
        workflow.add_conditional_edges(
            "decide_hist",
            self.route_after_decision,
            {
                "sample": "sample_certificates",
                "verdict": "assemble_verdict",
            },
        )

        # 3. Final Edges
        workflow.add_edge("sample_certificates", "assemble_verdict")
        workflow.add_edge("assemble_verdict", END)

        # 4. Compile the graph
        return workflow.compile()

    # =========================================================================
    # Public Runner
    # =========================================================================

    def run_workflow(
        self,
        g: Graph,
        labels: Optional[RoleLabels] = None,
        budget: Optional[SearchBudget] = None,
        workers: Optional[int] = None,
        seed: Optional[int] = None,
        enumeration_threshold: Optional[int] = None,
    ) -> VerificationResult:
        """
        Runs the compiled workflow from start to finish.

        Args:
            g: The connected input graph.
            labels: Role labels when g is a constructed counterexample.
            budget, workers, seed, enumeration_threshold: overrides of the settings.

        Returns:
            The combined VerificationResult.
        """
        settings = self.settings
        logger.info(f"Starting verification for n={g.vertex_count}, m={g.edge_count}")

        # Initialize the state
        initial_state: VerificationState = {
            "graph": g,
            "labels": labels,
            "budget": budget or settings.default_budget(),
            "workers": workers or settings.workers,
            "seed": settings.sample_seed if seed is None else seed,
            "enumeration_threshold": (
                settings.enumeration_threshold
                if enumeration_threshold is None
                else enumeration_threshold
            ),
            "sample_size": settings.certificate_sample_size,
            "spanning_trees": None,
            "min_degree": None,
            "bridges": [],
            "trees_enumerated": None,
            "trees_with_degree_two_internal": None,
            "tree_without_degree_two": None,
            "decision": None,
            "certificates_checked": 0,
            "certificates_passed": 0,
            "methods": {},
            "result": None,
            "errors": [],
            "warnings": [],
            "steps_completed": [],
        }

        final_state: VerificationState = self.graph.invoke(initial_state, recursion_limit=10)
        return final_state["result"]
