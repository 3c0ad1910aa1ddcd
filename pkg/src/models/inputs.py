# src/models/inputs.py

"""
Pydantic models for system inputs.

Defines construction parameters, solver budgets and the resolved
configuration of one CLI run.
"""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CounterexampleParams(BaseModel):
    """Parameters (d, n) of the minimum-degree counterexample graph."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(description="Minimum degree; the core clique has d vertices.")
    n: int = Field(description="Total number of vertices.")

    @model_validator(mode="after")
    def check_bounds(self) -> "CounterexampleParams":
        if self.d < 2:
            raise ValueError(f"d < 2 (got d={self.d})")
        if self.n < self.d * (self.d + 2):
            raise ValueError(f"n < d(d+2) (got n={self.n}, d(d+2)={self.d * (self.d + 2)})")
        return self

    @property
    def tail_size(self) -> int:
        """Vertices of the tail clique W: n - (d-1)(d+1) - d (always >= d+1)."""
        return self.n - (self.d - 1) * (self.d + 1) - self.d

    @classmethod
    def minimal(cls, d: int) -> "CounterexampleParams":
        """Smallest admissible instance for a given d (n = d(d+2))."""
        return cls(d=d, n=d * (d + 2))


class StarBoundParams(BaseModel):
    """Inputs of the star-size lower bound c * (d / ln d) ** (1/3)."""

    model_config = ConfigDict(frozen=True)

    c: float = Field(default=1.0, gt=0.0, description="Unspecified positive constant.")
    d: int = Field(description="Minimum degree; must be >= 2 so ln d > 0.")

    @model_validator(mode="after")
    def check_degree(self) -> "StarBoundParams":
        if self.d < 2:
            raise ValueError(f"d < 2 (got d={self.d}); ln d must be positive")
        return self


class SearchBudget(BaseModel):
    """Optional node and wall-clock limits for a search; absent limits are unbounded."""

    model_config = ConfigDict(frozen=True)

    node_limit: Optional[int] = Field(default=None, ge=0, description="Maximum search nodes.")
    time_limit: Optional[float] = Field(
        default=None, ge=0.0, description="Maximum wall-clock seconds."
    )

    @property
    def unbounded(self) -> bool:
        return self.node_limit is None and self.time_limit is None

    def split(self, parts: int) -> "SearchBudget":
        """Share the node limit evenly across `parts` subproblems (time limit unchanged)."""
        if self.node_limit is None or parts <= 1:
            return self
        return SearchBudget(
            node_limit=max(1, self.node_limit // parts), time_limit=self.time_limit
        )

    def remaining(self, used_nodes: int, used_seconds: float) -> "SearchBudget":
        """What is left after an earlier search consumed `used_nodes` and `used_seconds`."""
        return SearchBudget(
            node_limit=None if self.node_limit is None else max(0, self.node_limit - used_nodes),
            time_limit=None if self.time_limit is None else max(0.0, self.time_limit - used_seconds),
        )


class Command(str, Enum):
    GENERATE = "generate"
    VERIFY = "verify"
    SOLVE = "solve"
    REPORT = "report"


class SolveMode(str, Enum):
    """Solver selected by `solve`."""

    MMID = "mmid"
    HIST = "hist"
    COUNT = "count"
    STAR_FACTOR = "starfactor"
    MAX_LEAF = "maxleaf"


class GraphSource(BaseModel):
    """Where the input graph comes from: a construction or a graph6 file (exactly one)."""

    counterexample: Optional[CounterexampleParams] = None
    input_path: Optional[Path] = None
    roles_path: Optional[Path] = None

    @model_validator(mode="after")
    def check_exactly_one(self) -> "GraphSource":
        if (self.counterexample is None) == (self.input_path is None):
            raise ValueError("exactly one graph source is required (--counterexample or --input)")
        return self


class RunConfig(BaseModel):
    """Resolved configuration of a single CLI command."""

    model_config = ConfigDict(use_enum_values=False)

    command: Command
    source: GraphSource
    mode: Optional[SolveMode] = None
    k: Optional[int] = Field(default=None, ge=2)
    budget: SearchBudget = Field(default_factory=SearchBudget)
    workers: int = Field(default=1, ge=1)
    seed: int = 0
    c: float = Field(default=1.0, gt=0.0)
    enumeration_threshold: int = Field(default=1_000_000, ge=0)
    report_path: Optional[Path] = None
    include_timing: bool = True

    def echo(self) -> dict:
        """Command echo embedded in reports (paths as strings, enums as values)."""
        return self.model_dump(mode="json", exclude={"report_path", "include_timing"})
