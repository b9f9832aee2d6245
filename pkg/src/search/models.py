"""
Search result types.
"""

from enum import Enum
from typing import FrozenSet, List, Optional, Set

from pydantic import BaseModel, ConfigDict, Field

from src.graph.mixed_graph import MixedGraph
from src.graph.models import Triple
from src.graph.sepsets import SepsetMap
from src.models.base import Algorithm


class TripleClass(str, Enum):
    """Conservative classification of an unshielded triple."""
    COLLIDER = "collider"
    NONCOLLIDER = "noncollider"
    AMBIGUOUS = "ambiguous"


class ColliderRecord(BaseModel):
    """A candidate collider with the p-value of its best separating set."""
    model_config = ConfigDict(frozen=True)

    triple: Triple = Field(..., description="Canonical unshielded triple")
    p_value: float = Field(..., ge=0.0, le=1.0, description="Maximum p-value over candidate sepsets")
    score: float = Field(..., description="Ranking key of the winning test, lower is closer to independence")
    sepset: FrozenSet[int] = Field(..., description="Winning separating set")


class SearchResult(BaseModel):
    """Output of one search run."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    algorithm: Algorithm
    graph: MixedGraph
    ambiguous_triples: Set[Triple] = Field(default_factory=set)
    sepsets: Optional[SepsetMap] = None
    colliders: List[ColliderRecord] = Field(default_factory=list)
    skipped_colliders: int = Field(0, description="PC-Max colliders refused by the bidirected guard")
    unshielded_triples: int = Field(0, description="Unshielded triples after the adjacency phase")
    elapsed_seconds: float = 0.0

    @property
    def ambiguity_rate(self) -> float:
        if not self.unshielded_triples:
            return 0.0
        return len(self.ambiguous_triples) / self.unshielded_triples
