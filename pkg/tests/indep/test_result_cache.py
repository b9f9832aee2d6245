"""
Tests for the independence test result cache.
"""

from unittest.mock import MagicMock

import pytest

from src.indep.base import TestResult
from src.indep.cache import CachedTest, ResultCache, query_key
from src.indep.oracle import OracleTest


@pytest.fixture
def cache():
    """Create test cache instance."""
    return ResultCache()


def test_cache_set_get(cache):
    """Test basic cache set/get operations."""
    cache.set("test", "value")
    assert cache.get("test") == "value"


def test_cache_hit_ratio(cache):
    """Test cache hit ratio calculation."""
    cache.get("test")
    assert cache.hit_ratio == 0.0

    cache.set("test", "value")
    cache.get("test")
    assert cache.hit_ratio == 0.5

    cache.get("test")
    assert cache.hit_ratio == 2 / 3


def test_get_or_set_computes_once(cache):
    """Test that a hit skips the computation."""
    compute = MagicMock(return_value=42)
    assert cache.get_or_set("k", compute) == 42
    assert cache.get_or_set("k", compute) == 42
    compute.assert_called_once()
    assert cache.stats() == {"hits": 1, "misses": 1, "hit_ratio": 0.5, "size": 1}


def test_query_key_is_order_free():
    """Test that swapped endpoints and reordered sets share a key."""
    assert query_key(3, 1, [5, 2]) == query_key(1, 3, (2, 5))


def test_cached_test_delegates_once(chain_dag):
    """Test that repeated and mirrored queries hit the cache."""
    inner = OracleTest(chain_dag)
    inner.test = MagicMock(wraps=inner.test)
    cached = CachedTest(inner)

    first = cached.test(0, 2, [1])
    second = cached.test(2, 0, [1])

    assert first == second == TestResult(True, 1.0, 0.0)
    inner.test.assert_called_once()
    assert cached.kind == inner.kind
    assert cached.variables == inner.variables


def test_cached_test_keeps_inner_ranking():
    """Test that the wrapper ranks results the way the wrapped test does."""
    inner = MagicMock()
    inner.variables = ["A", "B"]
    inner.ranking_key.return_value = -3.5
    cached = CachedTest(inner)

    assert cached.ranking_key(TestResult(True, 0.2, -3.5)) == -3.5
    inner.ranking_key.assert_called_once_with(TestResult(True, 0.2, -3.5))
