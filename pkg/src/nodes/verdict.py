# src/nodes/verdict.py

"""
Node responsible for combining per-method evidence into the final verdict
on "every spanning tree has an internal vertex of degree 2".
"""

from typing import Any, Dict, Optional

from src.graph.state import VerificationState
from src.models.outputs import Verdict, VerificationResult, VerificationVerdict
from src.nodes.base import BaseNode
from src.utils.logger import get_logger

logger = get_logger("VerdictNode")

# Methods that prove or refute the claim for the whole graph. Certificates
# only corroborate: they must agree but never decide on their own.
DECISIVE_METHODS = ("enumeration", "decision")


def as_text(value) -> Optional[str]:
    """Counts leave the process as decimal strings."""
    return None if value is None else str(value)


def combine_verdicts(methods: dict[str, Verdict]) -> tuple[VerificationVerdict, bool]:
    """Return the combined verdict and whether all conclusive methods agree."""
    conclusive = {v for v in methods.values() if v != Verdict.INDETERMINATE}
    agree = len(conclusive) <= 1
    if not agree:
        return VerificationVerdict.INCONSISTENT, False

    decisive = {methods[name] for name in DECISIVE_METHODS if name in methods}
    if Verdict.TRUE in decisive:
        return VerificationVerdict.CONFIRMED, True
    if Verdict.FALSE in decisive:
        return VerificationVerdict.REFUTED, True
    return VerificationVerdict.INDETERMINATE, True


class AssembleVerdictNode(BaseNode):
    step_name = "assemble_verdict"

    def run(self, state: VerificationState) -> Dict[str, Any]:
        methods = state["methods"]
        verdict, agree = combine_verdicts(methods)
        if state["errors"]:
            verdict = VerificationVerdict.INDETERMINATE

        decision = state["decision"]
        witness = None
        if verdict == VerificationVerdict.REFUTED:
            witness = (decision.witness if decision else None) or state["tree_without_degree_two"]

        result = VerificationResult(
            verdict=verdict,
            agree=agree,
            spanning_trees=as_text(state["spanning_trees"]) or "0",
            methods=methods,
            trees_enumerated=as_text(state["trees_enumerated"]),
            trees_with_degree_two_internal=as_text(state["trees_with_degree_two_internal"]),
            certificates_checked=state["certificates_checked"],
            certificates_passed=state["certificates_passed"],
            hist_witness=witness,
            bridges=state["bridges"],
            min_degree=state["min_degree"],
            decision=decision,
            errors=state["errors"],
            warnings=state["warnings"],
            steps_completed=state["steps_completed"] + [self.step_name],
        )

        if verdict == VerificationVerdict.INCONSISTENT:
            logger.error(f"Methods disagree: {methods}")
        else:
            logger.info(f"Verification verdict: {verdict.value}")
        return {"result": result}
