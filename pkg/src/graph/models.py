"""
Value types for mixed graphs: node identifiers, endpoint marks, edges and triples.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class Endpoint(str, Enum):
    """Edge endpoint marks."""
    TAIL = "tail"
    ARROW = "arrow"


@dataclass(frozen=True, order=True)
class NodeId:
    """A variable: dense index plus display name."""
    index: int
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Edge:
    """An edge stored in canonical order (a < b) with a mark at each end."""
    a: int
    b: int
    end_at_a: Endpoint
    end_at_b: Endpoint

    def __post_init__(self) -> None:
        if self.a >= self.b:
            raise ValueError(f"Edge must be stored with a < b, got ({self.a}, {self.b})")

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.a, self.b)

    @property
    def is_undirected(self) -> bool:
        return self.end_at_a == Endpoint.TAIL and self.end_at_b == Endpoint.TAIL

    @property
    def is_bidirected(self) -> bool:
        return self.end_at_a == Endpoint.ARROW and self.end_at_b == Endpoint.ARROW

    @property
    def is_directed(self) -> bool:
        return (self.end_at_a == Endpoint.ARROW) != (self.end_at_b == Endpoint.ARROW)


@dataclass(frozen=True, order=True)
class Triple:
    """An (unshielded) triple x - y - z over node indices.

    Always build through `Triple.of` so that (x, y, z) and (z, y, x) compare equal.
    """
    x: int
    y: int
    z: int

    @classmethod
    def of(cls, x: int, y: int, z: int) -> "Triple":
        if len({x, y, z}) != 3:
            raise ValueError(f"Triple needs three distinct nodes, got ({x}, {y}, {z})")
        if x > z:
            x, z = z, x
        return cls(x, y, z)

    @property
    def endpoints(self) -> Tuple[int, int]:
        return (self.x, self.z)


def pair_key(x: int, y: int) -> Tuple[int, int]:
    """Unordered pair key with the smaller index first."""
    return (x, y) if x < y else (y, x)
