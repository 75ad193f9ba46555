"""Shared-reference network over papers.

Two papers are linked when their bibliographies contain fuzzy-identical
entries. The all-pairs comparison is done as a similarity self-join over the
distinct normalized reference strings:

* strings are bucketed by length, and only lengths within the allowed edit
  budget of each other are ever paired;
* each string is cut into ``k + 1`` disjoint segments (``k`` = edit budget
  for its length). Any string within ``k`` edits must contain one of those
  segments verbatim, shifted by at most ``k`` positions, so candidates come
  from an exact segment index instead of a scan;
* surviving candidates are verified with the banded, early-exit DP.

The filter is lossless: it returns exactly the pairs ``similar`` accepts.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .._workers import parallel_map
from .levenshtein import SimilarityConfig, bounded_distance

Edge = Tuple[str, str]


def _segments(length: int, parts: int):
    """Even partition of ``range(length)`` into ``parts`` (start, size) pieces, longer pieces last."""
    base, extra = divmod(length, parts)
    out, start = [], 0
    for i in range(parts):
        size = base + (1 if i >= parts - extra else 0)
        out.append((start, size))
        start += size
    return out


def similarity_join(strings: Sequence[str], config: SimilarityConfig, workers=None) -> List[Tuple[int, int, int]]:
    """All index pairs ``(i, j, distance)`` with ``i < j`` whose strings are similar.

    ``strings`` should be distinct; duplicates are reported with distance 0.
    """
    by_len: Dict[int, List[int]] = defaultdict(list)
    for idx, s in enumerate(strings):
        by_len[len(s)].append(idx)

    # index: (length, segment number) -> segment text -> ids of strings of that length
    index: Dict[Tuple[int, int], Dict[str, List[int]]] = {}
    layout: Dict[int, Tuple[int, list]] = {}
    for length, ids in by_len.items():
        k = config.max_distance(length)
        if length == 0 or k < 0:
            continue
        segs = _segments(length, k + 1)
        layout[length] = (k, segs)
        for seg_no, (start, size) in enumerate(segs):
            table = index.setdefault((length, seg_no), {})
            for idx in ids:
                table.setdefault(strings[idx][start:start + size], []).append(idx)

    results = []
    if 0 in by_len and config.max_distance(0) >= 0:
        empties = by_len[0]
        results.extend((a, b, 0) for n, a in enumerate(empties) for b in empties[n + 1:])

    t = config.threshold_fraction
    lengths = sorted(layout)

    def query_bucket(short_len):
        # partner lengths L >= short_len with L - short_len <= k(L); since
        # k(L) < (1 - t) * L this needs t * L < short_len
        window = []
        for long_len in lengths[bisect.bisect_left(lengths, short_len):]:
            if long_len * t.numerator >= short_len * t.denominator:
                break
            if long_len - short_len <= layout[long_len][0]:
                window.append(long_len)
        out = []
        for q in by_len[short_len]:
            s = strings[q]
            found = set()
            for long_len in window:
                k, segs = layout[long_len]
                for seg_no, (start, size) in enumerate(segs):
                    table = index[(long_len, seg_no)]
                    lo = max(0, start - k)
                    hi = min(short_len - size, start + k)
                    for pos in range(lo, hi + 1):
                        hit = table.get(s[pos:pos + size])
                        if hit:
                            found.update(hit)
            for cand in found:
                if cand == q or (len(strings[cand]) == short_len and cand < q):
                    continue
                other = strings[cand]
                d = bounded_distance(s, other, layout[len(other)][0])
                if d is not None:
                    out.append((q, cand, d) if q < cand else (cand, q, d))
        return out

    buckets = [n for n in sorted(by_len) if n > 0]
    for part in parallel_map(query_bucket, buckets, workers):
        results.extend(part)
    results.sort()
    return results


@dataclass(frozen=True)
class RefMatchNetwork:
    """Undirected weighted paper graph; edge keys are sorted (paper_id, paper_id) pairs."""

    nodes: FrozenSet[str]
    edges: Dict[Edge, int]
    matched_pairs: Dict[Edge, Tuple[Tuple[int, int], ...]]

    def neighbors(self, node: str):
        return sorted(b if a == node else a for (a, b) in self.edges if node in (a, b))

    def subgraph(self, nodes) -> "RefMatchNetwork":
        keep = frozenset(nodes) & self.nodes
        edges = {e: w for e, w in self.edges.items() if e[0] in keep and e[1] in keep}
        return RefMatchNetwork(keep, edges, {e: self.matched_pairs[e] for e in edges})


def build_network(papers, config: SimilarityConfig = SimilarityConfig(), workers=None) -> RefMatchNetwork:
    """Link papers whose bibliographies share fuzzy-identical references.

    Edge weight is the size of a greedy one-to-one matching between the two
    bibliographies: candidate entry pairs are taken by descending similarity,
    then by bibliography index, and each entry is used at most once. Input
    order and ``workers`` do not affect the result.
    """
    papers = list(papers)
    ids = [p.paper_id for p in papers]
    if any(not pid for pid in ids):
        raise ValueError("papers must have non-empty paper_ids")
    seen = set()
    for pid in ids:
        if pid in seen:
            raise ValueError(f"duplicate paper_id {pid!r}")
        seen.add(pid)

    # distinct normalized strings, ordered so ids are input-order independent
    occurrences: Dict[str, List[Tuple[str, int]]] = defaultdict(list)
    for p in papers:
        for i, entry in enumerate(p.bibliography):
            occurrences[entry.normalized].append((p.paper_id, i))
    strings = sorted(occurrences)
    occ = [occurrences[s] for s in strings]

    # per paper pair: candidate (normalized distance, index in first, index in second)
    candidates: Dict[Edge, List[Tuple[float, int, int]]] = defaultdict(list)

    def add(occ_a, occ_b, dist_ratio):
        for pa, ia in occ_a:
            for pb, ib in occ_b:
                if pa == pb:
                    continue
                if pa < pb:
                    candidates[(pa, pb)].append((dist_ratio, ia, ib))
                else:
                    candidates[(pb, pa)].append((dist_ratio, ib, ia))

    for n, group in enumerate(occ):
        if len(group) > 1 and config.max_distance(len(strings[n])) >= 0:
            for x in range(len(group)):
                add(group[x:x + 1], group[x + 1:], 0.0)
    for i, j, d in similarity_join(strings, config, workers):
        longest = max(len(strings[i]), len(strings[j]))
        add(occ[i], occ[j], d / longest if longest else 0.0)

    edges: Dict[Edge, int] = {}
    matched: Dict[Edge, Tuple[Tuple[int, int], ...]] = {}
    for key in sorted(candidates):
        cands = candidates[key]
        cands.sort()
        used_a, used_b, pairs = set(), set(), []
        for _, ia, ib in cands:
            if ia in used_a or ib in used_b:
                continue
            used_a.add(ia)
            used_b.add(ib)
            pairs.append((ia, ib))
        edges[key] = len(pairs)
        matched[key] = tuple(sorted(pairs))
    return RefMatchNetwork(frozenset(ids), edges, matched)
