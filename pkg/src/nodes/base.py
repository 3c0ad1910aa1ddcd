from abc import ABC, abstractmethod
from typing import Any, Dict

from config.settings import Settings
from src.graph.state import VerificationState
from src.utils.logger import get_logger

logger = get_logger("BaseNode")


class BaseNode(ABC):
    """
    Abstract base class for all nodes in the verify workflow.
    It handles common logic like step bookkeeping and error handling.
    """

    step_name: str = "node"

    def __init__(self, settings: Settings):
        self.settings = settings

    def execute(self, state: VerificationState) -> Dict[str, Any]:
        """
        LangGraph entry point: runs the node and turns unexpected failures
        into an error entry instead of aborting the workflow.
        """
        logger.info(f"Executing node: {self.step_name}")
        try:
            update = self.run(state)
        except Exception as e:
            error_msg = f"{self.step_name} failed: {e.__class__.__name__}: {e}"
            logger.error(error_msg, exc_info=True)
            return {
                "errors": state["errors"] + [error_msg],
                "steps_completed": state["steps_completed"] + [f"{self.step_name}_failed"],
            }
        update["steps_completed"] = state["steps_completed"] + [self.step_name]
        return update

    @abstractmethod
    def run(self, state: VerificationState) -> Dict[str, Any]:
        """
        The main execution method for the node. Must be implemented by subclasses.
        """
        pass
