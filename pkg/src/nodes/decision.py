# src/nodes/decision.py

"""
Node that runs the k = 3 branch-and-bound. A spanning tree whose internal
vertices all have degree >= 3 is exactly a tree with no internal vertex of
degree 2, so the decision verdict is the negation of the claim.
"""

from typing import Any, Dict

from src.engine.search import exists_tree_all_internal_at_least
from src.graph.state import VerificationState
from src.models.outputs import Verdict
from src.nodes.base import BaseNode

_NEGATION = {
    Verdict.TRUE: Verdict.FALSE,
    Verdict.FALSE: Verdict.TRUE,
    Verdict.INDETERMINATE: Verdict.INDETERMINATE,
}


class DecideHistNode(BaseNode):
    step_name = "decide_hist"

    def run(self, state: VerificationState) -> Dict[str, Any]:
        decision = exists_tree_all_internal_at_least(
            state["graph"], 3, state["budget"], state["workers"]
        )
        methods = dict(state["methods"])
        methods["decision"] = _NEGATION[decision.verdict]
        return {"decision": decision, "methods": methods}
