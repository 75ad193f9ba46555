"""Suspicious-author pipeline: spike filter, citing-paper forensics, matching and flagging.

Outputs are irregularity indicators, not verdicts of misconduct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ._workers import parallel_map
from .corpus import AuthorProfile, Corpus
from .metrics import (
    C2Summary,
    CitingPaperCount,
    NotComputable,
    c2_summary,
    citing_paper_counts,
    exact,
)

INFINITE = math.inf


@dataclass(frozen=True)
class SpikeFilterConfig:
    min_total_citations: int = 200
    min_publications: int = 10
    min_yoy_ratio: float = 10.0
    min_share_of_total: float = 0.25

    def __post_init__(self):
        for name in ("min_total_citations", "min_publications", "min_yoy_ratio", "min_share_of_total"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if self.min_share_of_total > 1:
            raise ValueError("min_share_of_total must be <= 1")


@dataclass(frozen=True)
class SpikeFlag:
    author_id: str
    spike_year: int
    yoy_ratio: float  # math.inf when the previous year had zero citations
    share_of_total: float

    def as_dict(self) -> dict:
        return {
            "author_id": self.author_id,
            "spike_year": self.spike_year,
            "yoy_ratio": "infinite" if math.isinf(self.yoy_ratio) else self.yoy_ratio,
            "share_of_total": self.share_of_total,
        }


def spike_filter(profile: AuthorProfile, config: SpikeFilterConfig = SpikeFilterConfig()) -> Optional[SpikeFlag]:
    """Flag the earliest year whose citations jumped by the configured factor.

    The total-citation and publication gates are applied first. A year
    qualifies when its count is at least ``min_yoy_ratio`` times the previous
    calendar year's count and makes up at least ``min_share_of_total`` of all
    citations. A previous count of zero qualifies (ratio reported as
    infinite) once the current count reaches ``min_yoy_ratio``. The first
    recorded year has no observed predecessor and never qualifies.
    """
    history = profile.annual_citations
    total = sum(history.values())
    if total < config.min_total_citations or profile.publication_count < config.min_publications:
        return None
    ratio = exact(config.min_yoy_ratio)
    share_min = exact(config.min_share_of_total)
    years = sorted(history)
    if not years:
        return None
    for year in range(years[0] + 1, years[-1] + 1):
        cur = history.get(year, 0)
        prev = history.get(year - 1, 0)
        if cur == 0 or Fraction(cur, total) < share_min:
            continue
        if prev == 0:
            if cur >= ratio:
                return SpikeFlag(profile.author_id, year, INFINITE, cur / total)
        elif cur >= ratio * prev:
            return SpikeFlag(profile.author_id, year, cur / prev, cur / total)
    return None


@dataclass(frozen=True)
class CitingPaperForensics:
    citing_paper_id: str
    refs_to_author: int
    total_refs: int
    share_of_bibliography: float
    refs_per_page: Optional[float]  # None: page count unknown
    orphan_share: Optional[float]  # None: main-text citations unknown

    def as_dict(self) -> dict:
        return {
            "citing_paper_id": self.citing_paper_id,
            "refs_to_author": self.refs_to_author,
            "total_refs": self.total_refs,
            "share_of_bibliography": self.share_of_bibliography,
            "refs_per_page": "not computable" if self.refs_per_page is None else self.refs_per_page,
            "orphan_share": "not computable" if self.orphan_share is None else self.orphan_share,
        }


def _author_entry_indices(corpus: Corpus, paper, author: str) -> List[int]:
    return [i for i, e in enumerate(paper.bibliography) if author in corpus.entry_authors(e)]


def citing_paper_forensics(corpus: Corpus, author: str, citing_paper_id: str) -> CitingPaperForensics:
    """Reference-level statistics of one citing paper with respect to ``author``.

    ``refs_to_author`` counts bibliography entries, so duplicate entries to
    one work count separately (unlike the distinct-work ``n``).
    """
    corpus.author(author)
    paper = corpus.paper(citing_paper_id)
    idx = _author_entry_indices(corpus, paper, author)
    if not idx:
        raise ValueError(f"paper {citing_paper_id!r} does not cite author {author!r}")
    total = len(paper.bibliography)
    refs_per_page = None if paper.page_count is None else len(idx) / paper.page_count
    orphan = None
    if paper.main_text_cited is not None:
        orphan = sum(1 for i in idx if i not in paper.main_text_cited) / len(idx)
    return CitingPaperForensics(citing_paper_id, len(idx), total, len(idx) / total, refs_per_page, orphan)


def top_citing_papers(corpus: Corpus, author: str, k: int = 10) -> List[str]:
    """Citing papers with the most entries pointing at ``author``; ties by paper id."""
    if k < 1:
        raise ValueError("k must be >= 1")
    scored = []
    for pid in corpus.citing_papers(author):
        n_refs = len(_author_entry_indices(corpus, corpus.paper(pid), author))
        if n_refs:
            scored.append((-n_refs, pid))
    scored.sort()
    return [pid for _, pid in scored[:k]]


@dataclass(frozen=True)
class MatchCriteria:
    birth_year_tolerance: int = 2
    pub_count_rel_tolerance: float = 0.25
    citation_rel_tolerance: float = 0.25
    require_shared_keyword: bool = True

    def __post_init__(self):
        if min(self.birth_year_tolerance, self.pub_count_rel_tolerance, self.citation_rel_tolerance) < 0:
            raise ValueError("tolerances must be >= 0")


def academic_birth_year(corpus: Corpus, profile: AuthorProfile) -> Optional[int]:
    if profile.first_pub_year is not None:
        return profile.first_pub_year
    years = [corpus.papers[p].year for p in profile.paper_ids if p in corpus.papers]
    return min(years) if years else None


def _keywords(profile: AuthorProfile):
    return {k.strip().lower() for k in profile.interests if k.strip()}


def _within(a: int, b: int, rel_tol: float) -> bool:
    # relative to the target's value b
    return abs(a - b) <= exact(rel_tol) * b


def match_distance(corpus: Corpus, target: AuthorProfile, candidate: AuthorProfile, criteria: MatchCriteria) -> Optional[float]:
    """Distance between two profiles, or None when a hard gate fails."""
    if criteria.require_shared_keyword and not (_keywords(target) & _keywords(candidate)):
        return None
    tb, cb = academic_birth_year(corpus, target), academic_birth_year(corpus, candidate)
    if tb is None or cb is None or abs(tb - cb) > criteria.birth_year_tolerance:
        return None
    tp, cp = target.publication_count, candidate.publication_count
    tc, cc = target.total_citations, candidate.total_citations
    if not _within(cp, tp, criteria.pub_count_rel_tolerance):
        return None
    if not _within(cc, tc, criteria.citation_rel_tolerance):
        return None
    birth_term = 0.0 if tb == cb else abs(tb - cb) / criteria.birth_year_tolerance
    return birth_term + abs(math.log1p(tp) - math.log1p(cp)) + abs(math.log1p(tc) - math.log1p(cc))


def find_matched_author(corpus: Corpus, target: str, criteria: MatchCriteria = MatchCriteria()) -> Optional[str]:
    """Closest comparable author to ``target``; ties go to the smaller author id."""
    profile = corpus.author(target)
    best: Optional[Tuple[float, str]] = None
    for cand in corpus.iter_authors():
        if cand.author_id == target:
            continue
        d = match_distance(corpus, profile, cand, criteria)
        if d is not None and (best is None or (d, cand.author_id) < best):
            best = (d, cand.author_id)
    return None if best is None else best[1]


@dataclass(frozen=True)
class Evidence:
    spike: SpikeFlag
    qualifying_counts: Tuple[CitingPaperCount, ...]
    c2: C2Summary
    c2_with_self: C2Summary = field(compare=False)

    def as_dict(self) -> dict:
        return {
            "spike": self.spike.as_dict(),
            "qualifying_citing_papers": [
                {"citing_paper_id": c.citing_paper_id, "n": c.n} for c in self.qualifying_counts
            ],
            "c2": self.c2.as_dict(),
            "c2_including_self": self.c2_with_self.as_dict(),
        }


def _evaluate(corpus: Corpus, author: str, config: SpikeFilterConfig, n_threshold: int):
    flag = spike_filter(corpus.author(author), config)
    if flag is None:
        return None
    counts = citing_paper_counts(corpus, author)
    qualifying = tuple(c for c in counts if not c.is_self_citation and c.n >= n_threshold)
    if not qualifying:
        return None
    return Evidence(flag, qualifying, c2_summary(counts, include_self=False), c2_summary(counts, include_self=True))


def flag_suspicious(
    corpus: Corpus,
    config: SpikeFilterConfig = SpikeFilterConfig(),
    n_threshold: int = 18,
    workers: Optional[int] = None,
) -> List[Tuple[str, Evidence]]:
    """Authors with a citation spike and at least one non-self citing paper with n >= ``n_threshold``.

    Returned in ascending author id order.
    """
    if n_threshold < 1:
        raise ValueError("n_threshold must be >= 1")
    ids = sorted(corpus.authors)
    results = parallel_map(lambda a: _evaluate(corpus, a, config, n_threshold), ids, workers)
    return [(a, ev) for a, ev in zip(ids, results) if ev is not None]


__all__ = [
    "CitingPaperForensics",
    "Evidence",
    "MatchCriteria",
    "NotComputable",
    "SpikeFilterConfig",
    "SpikeFlag",
    "academic_birth_year",
    "citing_paper_forensics",
    "find_matched_author",
    "flag_suspicious",
    "match_distance",
    "spike_filter",
    "top_citing_papers",
]
