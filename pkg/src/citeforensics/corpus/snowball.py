"""Co-author graph and breadth-first snowball sampling."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Set, Tuple


class CoauthorGraph:
    """Symmetric adjacency over author ids without self-loops."""

    def __init__(self, edges: Iterable[Tuple[str, str]] = (), nodes: Iterable[str] = ()):
        adj: Dict[str, Set[str]] = {n: set() for n in nodes}
        for a, b in edges:
            adj.setdefault(a, set())
            adj.setdefault(b, set())
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        self.adjacency: Dict[str, FrozenSet[str]] = {k: frozenset(v) for k, v in adj.items()}

    def __contains__(self, node):
        return node in self.adjacency

    def __len__(self):
        return len(self.adjacency)

    def neighbors(self, node: str) -> FrozenSet[str]:
        return self.adjacency[node]

    def edges(self):
        """Each undirected edge once, as a sorted pair, in sorted order."""
        out = set()
        for a, nbrs in self.adjacency.items():
            for b in nbrs:
                out.add((a, b) if a < b else (b, a))
        return sorted(out)

    @classmethod
    def from_corpus(cls, corpus) -> "CoauthorGraph":
        edges = []
        for p in corpus.iter_papers():
            ids = sorted(set(p.author_ids))
            edges.extend((ids[i], ids[j]) for i in range(len(ids)) for j in range(i + 1, len(ids)))
        return cls(edges, nodes=corpus.authors.keys())

    @classmethod
    def from_edge_list(cls, path) -> "CoauthorGraph":
        """Parse ``author_id<TAB>author_id`` lines; blank lines and ``#`` comments are skipped."""
        edges = []
        with Path(path).open("r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\n").rstrip("\r")
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2 or not parts[0] or not parts[1]:
                    raise ValueError(f"{path}:{lineno}: expected 'author_id<TAB>author_id'")
                edges.append((parts[0], parts[1]))
        return cls(edges)

    def to_edge_list(self, path) -> None:
        with Path(path).open("w", encoding="utf-8") as fh:
            for a, b in self.edges():
                fh.write(f"{a}\t{b}\n")


def snowball_sample(graph: CoauthorGraph, seeds, max_depth: int) -> Dict[int, Set[str]]:
    """Breadth-first collection of authors layer by layer.

    Returns ``{depth: authors first discovered at that depth}``; depth 0 is
    the seed set. Layers that discover nobody are omitted once the frontier
    empties.
    """
    seeds = set(seeds)
    if not seeds:
        raise ValueError("seeds must be non-empty")
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    missing = sorted(s for s in seeds if s not in graph)
    if missing:
        raise KeyError(f"seed(s) not in graph: {', '.join(missing)}")

    layers = {0: seeds}
    seen = set(seeds)
    frontier = seeds
    for depth in range(1, max_depth + 1):
        nxt = set()
        for node in frontier:
            nxt.update(graph.neighbors(node))
        nxt -= seen
        if not nxt:
            break
        seen |= nxt
        layers[depth] = nxt
        frontier = nxt
    return layers
