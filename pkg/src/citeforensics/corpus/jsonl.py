"""JSONL reading/writing for corpora and edge-list I/O for co-author graphs."""

from __future__ import annotations

import json
from pathlib import Path

from .model import (
    AuthorProfile,
    Corpus,
    CorpusFormatError,
    DuplicateIdError,
    PaperRecord,
    RefEntry,
)


def _iter_jsonl(path):
    path = Path(path)
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(path, lineno, f"malformed JSON: {exc.msg}") from None
            if not isinstance(obj, dict):
                raise CorpusFormatError(path, lineno, "expected a JSON object")
            yield lineno, obj


def _require(obj, key, kind, path, lineno):
    if key not in obj:
        raise CorpusFormatError(path, lineno, f"{kind} record missing field {key!r}")
    return obj[key]


def author_from_dict(obj: dict) -> AuthorProfile:
    return AuthorProfile(
        author_id=str(obj["author_id"]),
        name=str(obj.get("name", "")),
        affiliation=obj.get("affiliation"),
        interests=tuple(obj.get("interests") or ()),
        paper_ids=tuple(obj.get("paper_ids") or ()),
        annual_citations={int(y): int(c) for y, c in (obj.get("annual_citations") or {}).items()},
        first_pub_year=obj.get("first_pub_year"),
    )


def paper_from_dict(obj: dict) -> PaperRecord:
    bib = tuple(
        RefEntry(
            raw=str(e["raw"]),
            resolved_paper_id=e.get("resolved_paper_id"),
            resolved_author_ids=tuple(e.get("resolved_author_ids") or ()),
        )
        for e in obj.get("bibliography") or ()
    )
    mtc = obj.get("main_text_cited")
    return PaperRecord(
        paper_id=str(obj["paper_id"]),
        title=str(obj.get("title", "")),
        year=int(obj["year"]),
        author_ids=tuple(obj.get("author_ids") or ()),
        venue=obj.get("venue"),
        page_count=obj.get("page_count"),
        bibliography=bib,
        main_text_cited=None if mtc is None else frozenset(int(i) for i in mtc),
    )


def author_to_dict(a: AuthorProfile) -> dict:
    obj = {
        "author_id": a.author_id,
        "name": a.name,
        "interests": list(a.interests),
        "paper_ids": list(a.paper_ids),
        "annual_citations": {str(y): c for y, c in sorted(a.annual_citations.items())},
    }
    if a.affiliation is not None:
        obj["affiliation"] = a.affiliation
    if a.first_pub_year is not None:
        obj["first_pub_year"] = a.first_pub_year
    return obj


def paper_to_dict(p: PaperRecord) -> dict:
    bib = []
    for e in p.bibliography:
        entry = {"raw": e.raw}
        if e.resolved_paper_id is not None:
            entry["resolved_paper_id"] = e.resolved_paper_id
        if e.resolved_author_ids:
            entry["resolved_author_ids"] = list(e.resolved_author_ids)
        bib.append(entry)
    obj = {
        "paper_id": p.paper_id,
        "title": p.title,
        "year": p.year,
        "author_ids": list(p.author_ids),
        "bibliography": bib,
    }
    if p.venue is not None:
        obj["venue"] = p.venue
    if p.page_count is not None:
        obj["page_count"] = p.page_count
    if p.main_text_cited is not None:
        obj["main_text_cited"] = sorted(p.main_text_cited)
    return obj


def _read_records(path, kind, id_field, build):
    records, seen = [], set()
    for lineno, obj in _iter_jsonl(path):
        record_id = _require(obj, id_field, kind, path, lineno)
        if kind == "paper":
            _require(obj, "year", kind, path, lineno)
        if record_id in seen:
            raise DuplicateIdError(kind, record_id)
        seen.add(record_id)
        try:
            records.append(build(obj))
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusFormatError(path, lineno, f"bad {kind} record: {exc}") from None
    return records


def load_corpus(authors_path, papers_path, validate: bool = True) -> Corpus:
    """Read ``authors.jsonl`` and ``papers.jsonl`` into a validated :class:`Corpus`.

    Raises:
        OSError: a file cannot be read.
        CorpusFormatError: malformed JSON or a missing required field (carries the line number).
        DuplicateIdError: an id appears twice in one file.
        CorpusValidationError: dangling references; lists all of them.
    """
    authors = _read_records(authors_path, "author", "author_id", author_from_dict)
    papers = _read_records(papers_path, "paper", "paper_id", paper_from_dict)
    return Corpus(authors, papers, validate=validate)


def dump_corpus(corpus: Corpus, authors_path, papers_path) -> None:
    with open(authors_path, "w", encoding="utf-8") as fh:
        for a in corpus.iter_authors():
            fh.write(json.dumps(author_to_dict(a), ensure_ascii=False) + "\n")
    with open(papers_path, "w", encoding="utf-8") as fh:
        for p in corpus.iter_papers():
            fh.write(json.dumps(paper_to_dict(p), ensure_ascii=False) + "\n")
