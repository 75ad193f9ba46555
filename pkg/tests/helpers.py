"""Corpus builders and brute-force oracles shared by the test modules."""

import heapq
import json
from itertools import product

import numpy as np

from citeforensics.corpus import AuthorProfile, Corpus, PaperRecord, RefEntry
from citeforensics.metrics import CitingPaperCount


def bulk_corpus(n_citing, n_cited, target="A", citer="Z", self_cite=False, annual=None, pubs=None):
    """``n_citing`` papers, each citing the same ``n_cited`` papers written by ``target``."""
    cited = [f"{target}-p{i:03d}" for i in range(n_cited)]
    extra = [f"{target}-x{i:03d}" for i in range(max(0, (pubs or 0) - n_cited))]
    papers = [PaperRecord(pid, f"work {pid}", 2010, author_ids=(target,)) for pid in cited + extra]
    for c in range(n_citing):
        bib = tuple(RefEntry(f"{target}. work {pid}. 2010.", resolved_paper_id=pid) for pid in cited)
        authors = (target,) if self_cite else (citer,)
        papers.append(PaperRecord(f"c{c:03d}", f"citing {c}", 2020, author_ids=authors, bibliography=bib))
    authors = [
        AuthorProfile(target, target, interests=("x",), paper_ids=tuple(cited + extra),
                      annual_citations=annual or {2020: n_citing * n_cited}),
        AuthorProfile(citer, citer, interests=("y",), paper_ids=tuple(f"c{c:03d}" for c in range(n_citing))),
    ]
    return Corpus(authors, papers)


def counts_of(values, self_flags=None):
    self_flags = self_flags or [False] * len(values)
    return [CitingPaperCount(f"c{i}", v, s) for i, (v, s) in enumerate(zip(values, self_flags))]


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")


# ---------------------------------------------------------------- oracles

def brute_c2(values):
    """Largest n in 0..len(values) with at least n values >= n, by scanning every candidate."""
    best = 0
    for n in range(0, len(values) + 1):
        if sum(1 for v in values if v >= n) >= n:
            best = n
    return best


def dp_distance(a: str, b: str) -> int:
    """Wagner-Fischer, vectorized per row; the left-neighbour chain is a running minimum."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    bb = np.frombuffer(b.encode("utf-32-le"), dtype=np.uint32)
    idx = np.arange(len(b) + 1)
    prev = idx.copy()
    for i, ch in enumerate(a, start=1):
        cost = (bb != ord(ch)).astype(np.int64)
        tmp = np.empty(len(b) + 1, dtype=np.int64)
        tmp[0] = i
        tmp[1:] = np.minimum(prev[1:] + 1, prev[:-1] + cost)
        # cur[j] = min_k<=j tmp[k] + (j - k)
        prev = np.minimum.accumulate(tmp - idx) + idx
    return int(prev[-1])


def dijkstra_layers(adjacency, seeds, max_depth):
    dist = {s: 0 for s in seeds}
    heap = [(0, s) for s in sorted(seeds)]
    while heap:
        d, node = heapq.heappop(heap)
        if d > dist.get(node, float("inf")):
            continue
        for nb in adjacency.get(node, ()):
            if d + 1 < dist.get(nb, float("inf")):
                dist[nb] = d + 1
                heapq.heappush(heap, (d + 1, nb))
    layers = {}
    for node, d in dist.items():
        if d <= max_depth:
            layers.setdefault(d, set()).add(node)
    return layers


def closure_components(nodes, edges):
    """Reachability by Floyd-Warshall style closure on a boolean matrix."""
    nodes = sorted(nodes)
    pos = {n: i for i, n in enumerate(nodes)}
    reach = np.eye(len(nodes), dtype=bool)
    for a, b in edges:
        reach[pos[a], pos[b]] = reach[pos[b], pos[a]] = True
    for k in range(len(nodes)):
        reach |= np.outer(reach[:, k], reach[k, :])
    return {frozenset(nodes[j] for j in np.flatnonzero(reach[i])) for i in range(len(nodes))}


def exhaustive_match(bib_a, bib_b, sim):
    """Greedy one-to-one matching computed over the full cross product of two bibliographies."""
    cands = []
    for (i, x), (j, y) in product(enumerate(bib_a), enumerate(bib_b)):
        ok, ratio = sim(x, y)
        if ok:
            cands.append((ratio, i, j))
    cands.sort()
    used_a, used_b, pairs = set(), set(), []
    for _, i, j in cands:
        if i not in used_a and j not in used_b:
            used_a.add(i)
            used_b.add(j)
            pairs.append((i, j))
    return sorted(pairs)
