"""
PC-family search: adjacency phase, collider orientation and the four drivers.
"""

from .adjacency import fas, fas_stable, find_sepset
from .algorithms import AlgorithmRegistry, run
from .colliders import (
    candidate_sets,
    classify_triple_cpc,
    independence_sets,
    max_p_sepset,
    orient_colliders_cpc,
    orient_colliders_maxp,
    orient_colliders_sepset,
)
from .exceptions import ConsistencyError, InvalidConfigError, SearchError
from .executor import ParallelExecutor
from .models import ColliderRecord, SearchResult, TripleClass

__all__ = [
    "AlgorithmRegistry",
    "ColliderRecord",
    "ConsistencyError",
    "InvalidConfigError",
    "ParallelExecutor",
    "SearchError",
    "SearchResult",
    "TripleClass",
    "candidate_sets",
    "classify_triple_cpc",
    "fas",
    "fas_stable",
    "find_sepset",
    "independence_sets",
    "max_p_sepset",
    "orient_colliders_cpc",
    "orient_colliders_maxp",
    "orient_colliders_sepset",
    "run",
]
