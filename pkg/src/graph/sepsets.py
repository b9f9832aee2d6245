"""
Separating-set bookkeeping for the adjacency search.
"""

from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from .exceptions import GraphPreconditionError
from .models import pair_key

EMPTY: FrozenSet[int] = frozenset()


class SepsetMap:
    """Unordered node pair -> conditioning set that removed the pair's edge.

    With ``marginal_default`` set, every pair without an explicit entry is
    taken to have been removed by an unconditional test, so `get` answers
    the empty set for it. Callers only ask about nonadjacent pairs, for
    which that is exactly what the depth-0 screen recorded.
    """

    def __init__(self, marginal_default: bool = False) -> None:
        self._sepsets: Dict[Tuple[int, int], FrozenSet[int]] = {}
        self.marginal_default = marginal_default

    def set(self, x: int, y: int, sepset: Iterable[int]) -> None:
        """Record the set that separated x and y.

        Raises:
            GraphPreconditionError: If the set contains x or y
        """
        frozen = frozenset(sepset)
        if x in frozen or y in frozen:
            raise GraphPreconditionError(
                f"Sepset for ({x}, {y}) may not contain an endpoint: {sorted(frozen)}"
            )
        self._sepsets[pair_key(x, y)] = frozen

    def get(self, x: int, y: int) -> Optional[FrozenSet[int]]:
        found = self._sepsets.get(pair_key(x, y))
        if found is None and self.marginal_default:
            return EMPTY
        return found

    def __contains__(self, pair: Tuple[int, int]) -> bool:
        return self.marginal_default or pair_key(*pair) in self._sepsets

    def __len__(self) -> int:
        return len(self._sepsets)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._sepsets))

    def items(self) -> Iterator[Tuple[Tuple[int, int], FrozenSet[int]]]:
        for pair in sorted(self._sepsets):
            yield pair, self._sepsets[pair]
