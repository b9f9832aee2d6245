"""
Worker pool for the parallel phases of the search.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class ParallelExecutor:
    """Order-preserving map over a thread pool.

    Results come back in input order, so callers that apply them serially
    get the same outcome for any number of threads. With one thread the
    work runs inline.
    """

    def __init__(self, threads: int = 1, chunks_per_thread: int = 4):
        """Initialize executor.

        Args:
            threads: Number of worker threads
            chunks_per_thread: Work items are batched into this many chunks per worker
        """
        if threads < 1:
            raise ValueError(f"threads must be >= 1, got {threads}")
        self.threads = threads
        self.chunks_per_thread = chunks_per_thread
        self._pool: Optional[ThreadPoolExecutor] = None

    def __enter__(self) -> "ParallelExecutor":
        if self.threads > 1:
            self._pool = ThreadPoolExecutor(max_workers=self.threads, thread_name_prefix="search")
            logger.debug("Started pool with %d workers", self.threads)
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(wait=True)
            self._pool = None

    def map(self, function: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """Apply `function` to every item; exceptions propagate to the caller.

        Args:
            function: Pure function of one item
            items: Work items

        Returns:
            Results in input order
        """
        if self._pool is None or len(items) < 2:
            return [function(item) for item in items]

        size = max(1, len(items) // (self.threads * self.chunks_per_thread))
        chunks = [items[start:start + size] for start in range(0, len(items), size)]

        def run_chunk(chunk: Sequence[T]) -> List[R]:
            return [function(item) for item in chunk]

        results: List[R] = []
        for chunk_result in self._pool.map(run_chunk, chunks):
            results.extend(chunk_result)
        return results
