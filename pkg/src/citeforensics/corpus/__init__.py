"""Corpus data model, JSONL ingestion and co-author sampling."""

from .jsonl import dump_corpus, load_corpus
from .model import (
    AuthorProfile,
    Corpus,
    CorpusError,
    CorpusFormatError,
    CorpusValidationError,
    DuplicateIdError,
    PaperRecord,
    RefEntry,
)
from .normalize import normalize_reference
from .snowball import CoauthorGraph, snowball_sample

__all__ = [
    "AuthorProfile",
    "CoauthorGraph",
    "Corpus",
    "CorpusError",
    "CorpusFormatError",
    "CorpusValidationError",
    "DuplicateIdError",
    "PaperRecord",
    "RefEntry",
    "dump_corpus",
    "load_corpus",
    "normalize_reference",
    "snowball_sample",
]
