# src/nodes/inspection.py

"""
Node that gathers the structural facts every later step relies on:
connectivity, minimum degree, bridges and the exact spanning-tree count.
"""

from typing import Any, Dict

from src.core.counting import spanning_tree_count
from src.core.errors import DisconnectedGraphError
from src.core.graph import find_bridges, is_connected, min_degree
from src.engine.certificate import check_labels
from src.graph.state import VerificationState
from src.nodes.base import BaseNode
from src.utils.logger import get_logger

logger = get_logger("InspectionNode")


class InspectGraphNode(BaseNode):
    step_name = "inspect_graph"

    def run(self, state: VerificationState) -> Dict[str, Any]:
        g = state["graph"]
        if not is_connected(g) or g.vertex_count == 0:
            raise DisconnectedGraphError()
        if state["labels"] is not None:
            check_labels(g, state["labels"])

        count = spanning_tree_count(g)
        bridges = sorted(tuple(edge) for edge in find_bridges(g))
        delta = min_degree(g)
        logger.info(
            f"Inspected n={g.vertex_count}, m={g.edge_count}: min degree {delta}, "
            f"{len(bridges)} bridges, {count} spanning trees"
        )

        warnings = list(state["warnings"])
        if delta < 2:
            warnings.append(f"minimum degree is {delta}; the degree-2 claim concerns d >= 2")
        return {
            "spanning_trees": count,
            "min_degree": delta,
            "bridges": bridges,
            "warnings": warnings,
        }
