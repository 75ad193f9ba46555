"""Data model for author profiles, papers and their bibliographies."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Tuple

from .normalize import normalize_reference


class CorpusError(ValueError):
    """Base class for every corpus loading or validation failure."""


class CorpusFormatError(CorpusError):
    """A JSONL line could not be parsed into a record."""

    def __init__(self, path, line_number: int, message: str):
        self.path = str(path)
        self.line_number = line_number
        super().__init__(f"{self.path}:{line_number}: {message}")


class DuplicateIdError(CorpusError):
    def __init__(self, kind: str, record_id: str):
        self.kind = kind
        self.record_id = record_id
        super().__init__(f"duplicate {kind} id {record_id!r}")


class CorpusValidationError(CorpusError):
    """Referential problems found after both files were parsed.

    ``errors`` lists every problem, not just the first one.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        preview = "; ".join(self.errors[:5])
        more = f" (+{len(self.errors) - 5} more)" if len(self.errors) > 5 else ""
        super().__init__(f"{len(self.errors)} validation error(s): {preview}{more}")


@dataclass(frozen=True)
class RefEntry:
    raw: str
    resolved_paper_id: Optional[str] = None
    resolved_author_ids: Tuple[str, ...] = ()
    normalized: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "resolved_author_ids", tuple(self.resolved_author_ids))
        object.__setattr__(self, "normalized", normalize_reference(self.raw))


@dataclass(frozen=True)
class AuthorProfile:
    author_id: str
    name: str
    affiliation: Optional[str] = None
    interests: Tuple[str, ...] = ()
    paper_ids: Tuple[str, ...] = ()
    # year -> citations received that year; treat as read-only
    annual_citations: Mapping[int, int] = field(default_factory=dict, hash=False)
    first_pub_year: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "interests", tuple(self.interests))
        object.__setattr__(self, "paper_ids", tuple(self.paper_ids))
        object.__setattr__(
            self,
            "annual_citations",
            {int(y): int(c) for y, c in sorted(dict(self.annual_citations).items())},
        )

    @property
    def total_citations(self) -> int:
        return sum(self.annual_citations.values())

    @property
    def publication_count(self) -> int:
        return len(self.paper_ids)


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    title: str
    year: int
    author_ids: Tuple[str, ...] = ()
    venue: Optional[str] = None
    page_count: Optional[int] = None
    bibliography: Tuple[RefEntry, ...] = ()
    # None means the main-text citation positions are unknown
    main_text_cited: Optional[FrozenSet[int]] = None

    def __post_init__(self):
        object.__setattr__(self, "author_ids", tuple(self.author_ids))
        object.__setattr__(self, "bibliography", tuple(self.bibliography))
        if self.main_text_cited is not None:
            object.__setattr__(self, "main_text_cited", frozenset(self.main_text_cited))


class Corpus:
    """Validated, read-only collection of authors and papers with id indices.

    Bibliography entries are attributed to authors through either their
    ``resolved_author_ids`` or the author list of their ``resolved_paper_id``.
    """

    def __init__(self, authors, papers, validate: bool = True):
        self._authors: Dict[str, AuthorProfile] = {}
        self._papers: Dict[str, PaperRecord] = {}
        for a in authors:
            if a.author_id in self._authors:
                raise DuplicateIdError("author", a.author_id)
            self._authors[a.author_id] = a
        for p in papers:
            if p.paper_id in self._papers:
                raise DuplicateIdError("paper", p.paper_id)
            self._papers[p.paper_id] = p
        if validate:
            errors = self.validation_errors()
            if errors:
                raise CorpusValidationError(errors)
        index: Dict[str, set] = {}
        for p in self._papers.values():
            for entry in p.bibliography:
                for aid in self.entry_authors(entry):
                    index.setdefault(aid, set()).add(p.paper_id)
        self._cited_by = {k: tuple(sorted(v)) for k, v in index.items()}

    def __len__(self):
        return len(self._authors) + len(self._papers)

    def __eq__(self, other):
        if not isinstance(other, Corpus):
            return NotImplemented
        return self._authors == other._authors and self._papers == other._papers

    def __repr__(self):
        return f"Corpus(authors={len(self._authors)}, papers={len(self._papers)})"

    @property
    def counts(self) -> Tuple[int, int]:
        return len(self._authors), len(self._papers)

    @property
    def authors(self) -> Mapping[str, AuthorProfile]:
        return self._authors

    @property
    def papers(self) -> Mapping[str, PaperRecord]:
        return self._papers

    def author(self, author_id: str) -> AuthorProfile:
        try:
            return self._authors[author_id]
        except KeyError:
            raise KeyError(f"unknown author {author_id!r}") from None

    def paper(self, paper_id: str) -> PaperRecord:
        try:
            return self._papers[paper_id]
        except KeyError:
            raise KeyError(f"unknown paper {paper_id!r}") from None

    def iter_authors(self) -> Iterator[AuthorProfile]:
        """Authors in ascending id order."""
        for key in sorted(self._authors):
            yield self._authors[key]

    def iter_papers(self) -> Iterator[PaperRecord]:
        for key in sorted(self._papers):
            yield self._papers[key]

    def validation_errors(self):
        errors = []
        for a in self.iter_authors():
            if not a.author_id:
                errors.append("empty author_id")
            for pid in a.paper_ids:
                if pid not in self._papers:
                    errors.append(f"author {a.author_id!r} lists unknown paper_id {pid!r}")
            for year, count in a.annual_citations.items():
                if count < 0:
                    errors.append(f"author {a.author_id!r} has negative citations in {year}")
        for p in self.iter_papers():
            if not p.paper_id:
                errors.append("empty paper_id")
            for aid in p.author_ids:
                if aid not in self._authors:
                    errors.append(f"paper {p.paper_id!r} lists unknown author_id {aid!r}")
            if p.page_count is not None and p.page_count <= 0:
                errors.append(f"paper {p.paper_id!r} has non-positive page_count")
            for idx, entry in enumerate(p.bibliography):
                if entry.resolved_paper_id is not None and entry.resolved_paper_id not in self._papers:
                    errors.append(
                        f"paper {p.paper_id!r} bibliography[{idx}] resolves to unknown "
                        f"paper_id {entry.resolved_paper_id!r}"
                    )
                for aid in entry.resolved_author_ids:
                    if aid not in self._authors:
                        errors.append(
                            f"paper {p.paper_id!r} bibliography[{idx}] resolves to unknown "
                            f"author_id {aid!r}"
                        )
            if p.main_text_cited is not None:
                for idx in sorted(p.main_text_cited):
                    if not 0 <= idx < len(p.bibliography):
                        errors.append(
                            f"paper {p.paper_id!r} main_text_cited index {idx} out of range"
                        )
        return errors

    def entry_authors(self, entry: RefEntry) -> FrozenSet[str]:
        """Author ids a bibliography entry is attributed to."""
        ids = set(entry.resolved_author_ids)
        if entry.resolved_paper_id is not None:
            cited = self._papers.get(entry.resolved_paper_id)
            if cited is not None:
                ids.update(cited.author_ids)
        return frozenset(ids)

    @staticmethod
    def work_key(entry: RefEntry) -> str:
        """Identity of the cited work: the resolved paper, else the normalized string."""
        if entry.resolved_paper_id is not None:
            return entry.resolved_paper_id
        return "raw:" + entry.normalized

    def citing_papers(self, author_id: str) -> Tuple[str, ...]:
        """Ids of papers with at least one bibliography entry attributed to the author."""
        return self._cited_by.get(author_id, ())

    def filter_papers(self, venue: Optional[str] = None, year: Optional[int] = None):
        """Papers matching the venue/year filters, in id order."""
        out = []
        for p in self.iter_papers():
            if venue is not None and p.venue != venue:
                continue
            if year is not None and p.year != year:
                continue
            out.append(p)
        return out
