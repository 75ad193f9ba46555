"""Connected components of the reference network and bulk-citation scanning."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

from .network import RefMatchNetwork


class UnionFind:
    """Disjoint sets whose representative is always the smallest member."""

    def __init__(self, items=()):
        self._parent = {x: x for x in items}

    def add(self, x):
        self._parent.setdefault(x, x)

    def find(self, x):
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self._parent[rb] = ra

    def groups(self) -> Dict[object, set]:
        out: Dict[object, set] = {}
        for x in self._parent:
            out.setdefault(self.find(x), set()).add(x)
        return out


def connected_components(network: RefMatchNetwork) -> Dict[int, FrozenSet[str]]:
    """Components numbered from 0 by descending size, ties by smallest paper id."""
    uf = UnionFind(network.nodes)
    for a, b in network.edges:
        uf.add(a)
        uf.add(b)
        uf.union(a, b)
    comps = sorted(uf.groups().values(), key=lambda g: (-len(g), min(g)))
    return {i: frozenset(g) for i, g in enumerate(comps)}


def jaccard(a, b) -> Fraction:
    union = len(a | b)
    return Fraction(len(a & b), union) if union else Fraction(1)


def mean_pairwise_jaccard(sets) -> Fraction:
    sets = list(sets)
    pairs = list(combinations(sets, 2))
    if not pairs:
        return Fraction(1)
    return sum((jaccard(a, b) for a, b in pairs), Fraction(0)) / len(pairs)


@dataclass(frozen=True)
class ClusterFinding:
    component_id: int
    author_id: str
    mention_count: int
    citing_paper_ids: Tuple[str, ...]
    consistency: float

    def as_dict(self) -> dict:
        return {
            "component_id": self.component_id,
            "author_id": self.author_id,
            "mention_count": self.mention_count,
            "citing_paper_ids": list(self.citing_paper_ids),
            "consistency": self.consistency,
        }


def _work_keys(corpus, network: RefMatchNetwork, members) -> Dict[Tuple[str, int], str]:
    """Work identity per (paper, bibliography index) inside one component.

    Resolved entries use their paper id. Unresolved entries are grouped
    through the network's fuzzy matches so typo variants share a key.
    """
    uf = UnionFind()
    for pid in members:
        for i in range(len(corpus.paper(pid).bibliography)):
            uf.add((pid, i))
    for (a, b), pairs in network.matched_pairs.items():
        if a in members and b in members:
            for ia, ib in pairs:
                uf.union((a, ia), (b, ib))
    keys = {}
    for pid in members:
        for i, entry in enumerate(corpus.paper(pid).bibliography):
            if entry.resolved_paper_id is not None:
                keys[(pid, i)] = entry.resolved_paper_id
            else:
                root_pid, root_idx = uf.find((pid, i))
                keys[(pid, i)] = f"ref:{root_pid}#{root_idx}"
    return keys


def scan_clusters(corpus, network: RefMatchNetwork, components: Dict[int, FrozenSet[str]], mention_threshold: int = 10) -> List[ClusterFinding]:
    """Authors referenced at least ``mention_threshold`` times across two or more papers of one component.

    ``consistency`` is the mean pairwise Jaccard similarity of the sets of
    the author's works cited by each contributing paper; 1.0 means every
    paper cites the identical set.
    """
    if mention_threshold < 1:
        raise ValueError("mention_threshold must be >= 1")
    findings = []
    for comp_id in sorted(components):
        members = components[comp_id]
        if len(members) < 2:
            continue
        mentions: Dict[str, int] = {}
        works: Dict[str, Dict[str, set]] = {}
        for pid in sorted(members):
            for entry in corpus.paper(pid).bibliography:
                for aid in corpus.entry_authors(entry):
                    mentions[aid] = mentions.get(aid, 0) + 1
        candidates = {a for a, m in mentions.items() if m >= mention_threshold}
        if not candidates:
            continue
        keys = _work_keys(corpus, network, members)
        for pid in sorted(members):
            for i, entry in enumerate(corpus.paper(pid).bibliography):
                for aid in corpus.entry_authors(entry) & candidates:
                    works.setdefault(aid, {}).setdefault(pid, set()).add(keys[(pid, i)])
        for aid in sorted(candidates):
            per_paper = works.get(aid, {})
            if len(per_paper) < 2:
                continue
            citing = tuple(sorted(per_paper))
            consistency = mean_pairwise_jaccard(per_paper[p] for p in citing)
            findings.append(ClusterFinding(comp_id, aid, mentions[aid], citing, float(consistency)))
    return findings
