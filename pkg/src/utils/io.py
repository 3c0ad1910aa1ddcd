# src/utils/io.py

"""
File input/output for the CLI: graph6 files, role-label sidecars and JSON
reports.
"""

import json
from pathlib import Path
from typing import Any, Optional

from src.constructions.counterexample import build_counterexample
from src.core.errors import GraphError
from src.core.formats import emit_graph6, parse_graph6_lines
from src.core.graph import Graph
from src.models.inputs import GraphSource
from src.models.outputs import Report
from src.models.roles import RoleLabels
from src.utils.logger import get_logger

logger = get_logger("IO")

ROLES_SUFFIX = ".roles.json"
_TIMING_KEYS = frozenset({"elapsed_seconds", "wall_time_seconds"})


# =============================================================================
# Graphs & role labels
# =============================================================================


def sidecar_path(graph_path: Path) -> Path:
    """`g.g6` -> `g.roles.json`, next to the graph file."""
    return graph_path.with_name(graph_path.stem + ROLES_SUFFIX)


def read_graph(path: Path) -> Graph:
    """
    Read a graph6 file holding exactly one graph.

    Raises:
        Graph6ParseError: malformed content
        GraphError: zero or several graphs in the file
    """
    graphs = parse_graph6_lines(Path(path).read_bytes())
    if len(graphs) != 1:
        raise GraphError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def write_graph(path: Path, g: Graph) -> None:
    Path(path).write_bytes(emit_graph6(g) + b"\n")
    logger.info(f"Wrote graph6 ({g.vertex_count} vertices) to {path}")


def read_roles(path: Path) -> RoleLabels:
    return RoleLabels.model_validate_json(Path(path).read_text(encoding="utf-8"))


def write_roles(path: Path, labels: RoleLabels) -> None:
    Path(path).write_text(labels.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote role labels to {path}")


def load_source(source: GraphSource) -> tuple[Graph, Optional[RoleLabels]]:
    """
    Materialise the graph named by a GraphSource.

    A graph file picks up role labels from an explicit roles path or, failing
    that, from a sidecar next to it.
    """
    if source.counterexample is not None:
        return build_counterexample(source.counterexample)

    g = read_graph(source.input_path)
    roles_path = source.roles_path
    if roles_path is None and sidecar_path(source.input_path).exists():
        roles_path = sidecar_path(source.input_path)
        logger.info(f"Using role sidecar {roles_path}")
    labels = read_roles(roles_path) if roles_path is not None else None
    return g, labels


# =============================================================================
# Reports
# =============================================================================


def _strip_timing(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip_timing(v) for k, v in value.items() if k not in _TIMING_KEYS}
    if isinstance(value, list):
        return [_strip_timing(item) for item in value]
    return value


def dump_report(report: Report, include_timing: bool = True) -> str:
    """
    Serialise a report as sorted, indented JSON.

    Without timing the output depends only on the inputs, so identical runs
    produce identical bytes.
    """
    payload = report.model_dump(mode="json")
    if not include_timing:
        payload = _strip_timing(payload)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_report(path: Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"Report written to {path}")


def load_report(path: Path) -> Report:
    """Load and validate a saved JSON report."""
    return Report.model_validate_json(Path(path).read_text(encoding="utf-8"))
