"""Shared-reference matching network and bulk-citation cluster detection."""

from .clusters import ClusterFinding, UnionFind, connected_components, scan_clusters
from .export import to_dot, write_csv, write_dot
from .levenshtein import (
    SimilarityConfig,
    bounded_distance,
    levenshtein_distance,
    levenshtein_similarity,
    similar,
)
from .network import RefMatchNetwork, build_network, similarity_join

__all__ = [
    "ClusterFinding",
    "RefMatchNetwork",
    "SimilarityConfig",
    "UnionFind",
    "bounded_distance",
    "build_network",
    "connected_components",
    "levenshtein_distance",
    "levenshtein_similarity",
    "scan_clusters",
    "similar",
    "similarity_join",
    "to_dot",
    "write_csv",
    "write_dot",
]
