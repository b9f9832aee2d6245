"""
Result cache for independence tests.
"""

import threading
from typing import Any, Callable, Dict, FrozenSet, Hashable, Optional, Sequence, Tuple, TypeVar

import numpy as np

from .base import IndependenceTest, TestResult

T = TypeVar("T")

TestKey = Tuple[int, int, FrozenSet[int]]


class ResultCache:
    """
    Thread-safe in-memory cache.

    Features:
    - No expiry: cached values are results of pure computations
    - Hit/miss ratio tracking
    """

    def __init__(self) -> None:
        self.data: Dict[Hashable, Any] = {}
        self._lock = threading.Lock()

        # Statistics
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        """
        Get value from cache.

        Args:
            key: Cache key

        Returns:
            Cached value or None if not found
        """
        with self._lock:
            if key in self.data:
                self.hits += 1
                return self.data[key]
            self.misses += 1
            return None

    def set(self, key: Hashable, value: Any) -> None:
        with self._lock:
            self.data[key] = value

    def get_or_set(self, key: Hashable, compute: Callable[[], T]) -> T:
        """
        Get value from cache or compute and cache it if not found.

        Two threads missing the same key may both compute it; both store the
        same value.

        Args:
            key: Cache key
            compute: Function producing the value on a miss

        Returns:
            Cached or computed value
        """
        value = self.get(key)
        if value is not None:
            return value
        value = compute()
        self.set(key, value)
        return value

    @property
    def hit_ratio(self) -> float:
        """Calculate cache hit ratio."""
        total = self.hits + self.misses
        return self.hits / total if total > 0 else 0.0

    def stats(self) -> Dict[str, Any]:
        """Get cache statistics."""
        return {
            "hits": self.hits,
            "misses": self.misses,
            "hit_ratio": self.hit_ratio,
            "size": len(self.data),
        }


def query_key(x: int, y: int, given: Sequence[int]) -> TestKey:
    """Order-free key for a query."""
    if x > y:
        x, y = y, x
    return (x, y, frozenset(given))


class CachedTest(IndependenceTest):
    """Memoizing wrapper around another test."""

    def __init__(self, inner: IndependenceTest, cache: Optional[ResultCache] = None):
        self.inner = inner
        self.cache = cache if cache is not None else ResultCache()
        self.kind = inner.kind
        super().__init__(inner.variables, inner.config)

    def test(self, x: int, y: int, given: Sequence[int]) -> TestResult:
        return self.cache.get_or_set(query_key(x, y, given), lambda: self.inner.test(x, y, given))

    def ranking_key(self, result: TestResult) -> float:
        return self.inner.ranking_key(result)

    def marginal_dependence(self) -> np.ndarray:
        return self.inner.marginal_dependence()
