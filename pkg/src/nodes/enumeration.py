# src/nodes/enumeration.py

"""
Node that enumerates every spanning tree of a small graph and checks the
degree-2 claim (and the role certificate, when labels are present) on each.
"""

from typing import Any, Dict, Optional

from src.core.graph import Graph
from src.engine.certificate import certificate_check
from src.engine.enumeration import enumerate_spanning_trees
from src.engine.profile import profile_degrees
from src.engine.tree import SpanningTree
from src.graph.state import VerificationState
from src.models.outputs import Verdict
from src.models.roles import RoleLabels
from src.nodes.base import BaseNode
from src.utils.logger import get_logger

logger = get_logger("EnumerationNode")


class ClaimVisitor:
    """
    Stops the enumeration at the first tree with no internal vertex of
    degree 2, or whose certificate fails. Picklable for worker processes.
    """

    def __init__(self, graph: Graph, labels: Optional[RoleLabels]):
        self.graph = graph
        self.labels = labels

    def __call__(self, tree: SpanningTree) -> bool:
        if not profile_degrees(tree.degrees()).degree_two_internals:
            return False
        if self.labels is not None and not certificate_check(self.graph, self.labels, tree).passed:
            return False
        return True


class EnumerateTreesNode(BaseNode):
    step_name = "enumerate_trees"

    def run(self, state: VerificationState) -> Dict[str, Any]:
        g, labels = state["graph"], state["labels"]
        summary = enumerate_spanning_trees(
            g, ClaimVisitor(g, labels), state["budget"], state["workers"]
        )

        methods = dict(state["methods"])
        update: Dict[str, Any] = {"trees_enumerated": summary.trees}

        if summary.completed:
            methods["enumeration"] = Verdict.TRUE
            update["trees_with_degree_two_internal"] = summary.trees
            if labels is not None:
                methods["certificate"] = Verdict.TRUE
                update["certificates_checked"] = summary.trees
                update["certificates_passed"] = summary.trees
        elif summary.stopped:
            witness = SpanningTree.from_edges(g.vertex_count, summary.stop_witness or [])
            if not profile_degrees(witness.degrees()).degree_two_internals:
                methods["enumeration"] = Verdict.FALSE
                update["tree_without_degree_two"] = witness.as_list()
                logger.info(f"Found a spanning tree with no internal vertex of degree 2: {witness.as_list()}")
            else:
                methods["enumeration"] = Verdict.INDETERMINATE
                methods["certificate"] = Verdict.FALSE
                logger.error(f"Certificate failed on {witness.as_list()}")
        else:
            methods["enumeration"] = Verdict.INDETERMINATE
            logger.warning(f"Enumeration budget exhausted after {summary.trees} trees")

        update["methods"] = methods
        return update
