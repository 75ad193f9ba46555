"""Citation-concentration metrics and supporting distribution statistics.

Percentages produced here are :class:`fractions.Fraction` values so that
products such as ``c2_index * c2_percentage`` stay exact; convert with
``float()`` at serialization time.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .corpus import AuthorProfile, Corpus


class NotComputable(ValueError):
    """The inputs do not carry enough information for the requested metric."""


def exact(x) -> Fraction:
    """Exact rational for an int, Fraction or decimal literal (``0.98`` -> 49/50)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(repr(float(x)))


@dataclass(frozen=True)
class CitingPaperCount:
    citing_paper_id: str
    n: int
    is_self_citation: bool


@dataclass(frozen=True)
class C2Summary:
    c2_index: int
    c2_percentage: Fraction
    adjusted_c2: Fraction
    total_citations: int

    def as_dict(self) -> dict:
        return {
            "c2_index": self.c2_index,
            "c2_percentage": float(self.c2_percentage),
            "adjusted_c2": float(self.adjusted_c2),
            "total_citations": self.total_citations,
        }


@dataclass(frozen=True)
class TrajectorySummary:
    peak_year: int
    peak_value: int
    relative_series: Dict[int, float]


def citing_paper_counts(corpus: Corpus, author: str) -> List[CitingPaperCount]:
    """Per citing paper, the number of distinct works of ``author`` it cites.

    Bibliography entries pointing at the same work collapse to one. Results
    are ordered by citing paper id.
    """
    corpus.author(author)
    out = []
    for pid in corpus.citing_papers(author):
        paper = corpus.paper(pid)
        works = {
            corpus.work_key(e) for e in paper.bibliography if author in corpus.entry_authors(e)
        }
        if works:
            out.append(CitingPaperCount(pid, len(works), author in paper.author_ids))
    return out


def _select(counts: Iterable[CitingPaperCount], include_self: bool) -> List[int]:
    return [c.n for c in counts if include_self or not c.is_self_citation]


def h_index(per_paper_citations: Sequence[int]) -> int:
    """Largest h such that h items have at least h citations each."""
    ranked = sorted(per_paper_citations, reverse=True)
    h = 0
    for rank, value in enumerate(ranked, start=1):
        if value >= rank:
            h = rank
        else:
            break
    return h


def c2_index(counts: Iterable[CitingPaperCount], include_self: bool = True) -> int:
    """Largest n such that n citing papers each cite at least n distinct works."""
    return h_index(_select(counts, include_self))


def c2_summary(counts: Iterable[CitingPaperCount], include_self: bool = True) -> C2Summary:
    values = _select(counts, include_self)
    c2 = h_index(values)
    total = sum(values)
    qualifying = sum(v for v in values if v >= c2) if c2 > 0 else 0
    pct = Fraction(qualifying, total) if total else Fraction(0)
    return C2Summary(c2, pct, c2 * pct, total)


def bipartite_concentration(
    corpus: Corpus, author: str, k: int = 10, include_self: bool = True
) -> Fraction:
    """Citations from the top-``k`` citing papers per distinct work they cite.

    Equals ``k`` exactly when all ``k`` papers cite an identical set of works
    (a complete bipartite citing-paper/work graph) and 1 when the sets are
    pairwise disjoint.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    counts = [
        c for c in citing_paper_counts(corpus, author) if include_self or not c.is_self_citation
    ]
    if not counts:
        raise NotComputable(f"author {author!r} has no citing papers")
    top = sorted(counts, key=lambda c: (-c.n, c.citing_paper_id))[:k]
    union = set()
    for c in top:
        paper = corpus.paper(c.citing_paper_id)
        union.update(
            corpus.work_key(e) for e in paper.bibliography if author in corpus.entry_authors(e)
        )
    return Fraction(sum(c.n for c in top), len(union))


def trajectory(profile: AuthorProfile, window: int = 4) -> TrajectorySummary:
    """Annual citations relative to the peak year for the ``window`` years leading to it.

    The earliest year wins a tie for the peak; years absent from the history
    count as zero.
    """
    if window < 0:
        raise ValueError("window must be >= 0")
    history = profile.annual_citations
    if not history:
        raise NotComputable(f"author {profile.author_id!r} has no citation history")
    peak_year = min(history, key=lambda y: (-history[y], y))
    peak_value = history[peak_year]
    if peak_value <= 0:
        raise NotComputable(f"author {profile.author_id!r} has no peak (all-zero history)")
    series = {
        off: history.get(peak_year + off, 0) / peak_value for off in range(-window, 1)
    }
    return TrajectorySummary(peak_year, peak_value, series)


def source_discrepancy(count_a: int, count_b: int) -> float:
    """Relative citation drop from source A to source B, clamped to [0, 1]."""
    if count_a < 0 or count_b < 0:
        raise ValueError("citation counts must be non-negative")
    if count_a == 0:
        raise NotComputable("reference source has zero citations")
    drop = 1 - Fraction(count_b, count_a)
    return float(min(max(drop, Fraction(0)), Fraction(1)))


def percentile(values: Sequence[float], p: float):
    """Nearest-rank percentile: the ceil(p/100 * N)-th smallest value (rank >= 1)."""
    if not values:
        raise ValueError("values must be non-empty")
    if not 0 <= p <= 100:
        raise ValueError(f"percentile {p} outside [0, 100]")
    ordered = sorted(values)
    rank = max(1, math.ceil(exact(p) * len(ordered) / 100))
    return ordered[rank - 1]


def distribution_stats(values: Sequence[float], percentiles: Sequence[float]) -> Dict[float, float]:
    if not values:
        raise ValueError("values must be non-empty")
    return {p: percentile(values, p) for p in percentiles}


def ccdf(values: Sequence[float]) -> List[Tuple[float, int]]:
    """For each distinct value v ascending, the number of values >= v."""
    if not values:
        raise ValueError("values must be non-empty")
    ordered = sorted(values)
    n = len(ordered)
    out = []
    for v in sorted(set(ordered)):
        out.append((v, n - bisect.bisect_left(ordered, v)))
    return out


def paper_citation_counts(corpus: Corpus, author: str) -> List[int]:
    """Number of distinct corpus papers citing each of the author's papers."""
    profile = corpus.author(author)
    cited: Dict[str, set] = {pid: set() for pid in profile.paper_ids}
    for citing in corpus.citing_papers(author):
        for e in corpus.paper(citing).bibliography:
            if e.resolved_paper_id in cited:
                cited[e.resolved_paper_id].add(citing)
    return [len(cited[pid]) for pid in profile.paper_ids]
