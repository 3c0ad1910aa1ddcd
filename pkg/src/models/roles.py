# src/models/roles.py

"""
Role labels of a constructed counterexample graph.

Every vertex carries a role tag and an `owner`: the core-clique vertex its
block hangs from. Core vertices own themselves, pendant block i is owned
by core vertex i, and the tail block is owned by the hub (vertex 0).
"""

from collections import Counter
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Role(str, Enum):
    """Position of a vertex inside the counterexample layout."""

    CORE_HUB = "CoreHub"
    CORE = "Core"
    PENDANT_ANCHOR = "PendantAnchor"
    PENDANT_BODY = "PendantBody"
    TAIL_ANCHOR = "TailAnchor"
    TAIL_BODY = "TailBody"


CORE_ROLES = frozenset({Role.CORE_HUB, Role.CORE})
ANCHOR_ROLES = frozenset({Role.PENDANT_ANCHOR, Role.TAIL_ANCHOR})


class RoleLabels(BaseModel):
    """Per-vertex roles plus the core vertex each block is linked to."""

    model_config = ConfigDict(frozen=True)

    d: int = Field(ge=2, description="Minimum degree parameter of the construction.")
    roles: tuple[Role, ...] = Field(description="Role of each vertex, indexed by vertex id.")
    owner: tuple[int, ...] = Field(
        description="Core vertex whose block contains each vertex (core vertices own themselves)."
    )

    @model_validator(mode="after")
    def check_partition(self) -> "RoleLabels":
        if len(self.roles) != len(self.owner):
            raise ValueError("roles and owner must have one entry per vertex")

        counts = Counter(self.roles)
        expected = {
            Role.CORE_HUB: 1,
            Role.CORE: self.d - 1,
            Role.PENDANT_ANCHOR: self.d - 1,
            Role.TAIL_ANCHOR: 1,
        }
        for role, wanted in expected.items():
            if counts.get(role, 0) != wanted:
                raise ValueError(
                    f"expected {wanted} vertices with role {role.value}, found {counts.get(role, 0)}"
                )

        n = len(self.roles)
        for v, (role, owner) in enumerate(zip(self.roles, self.owner)):
            if not 0 <= owner < n or self.roles[owner] not in CORE_ROLES:
                raise ValueError(f"vertex {v} has owner {owner}, which is not a core vertex")
            if role in CORE_ROLES and owner != v:
                raise ValueError(f"core vertex {v} must own itself")
        return self

    # -------------------------------------------------------------------------
    # Lookups
    # -------------------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.roles)

    @property
    def hub(self) -> int:
        return self.roles.index(Role.CORE_HUB)

    def vertices_with(self, *roles: Role) -> list[int]:
        """Vertex ids whose role is one of `roles`, ascending."""
        wanted = set(roles)
        return [v for v, role in enumerate(self.roles) if role in wanted]

    def core_vertices(self) -> list[int]:
        """The clique K: hub plus core vertices."""
        return self.vertices_with(Role.CORE_HUB, Role.CORE)

    def anchor_of(self, core_vertex: int) -> int:
        """The anchor z_u joined to core vertex u by a bridge."""
        for v, role in enumerate(self.roles):
            if role in ANCHOR_ROLES and self.owner[v] == core_vertex:
                return v
        raise KeyError(f"vertex {core_vertex} has no anchor")

    def anchor_edges(self) -> list[tuple[int, int]]:
        """The d forced edges (u, z_u), one per core vertex, sorted."""
        return sorted(
            (min(u, self.anchor_of(u)), max(u, self.anchor_of(u))) for u in self.core_vertices()
        )
