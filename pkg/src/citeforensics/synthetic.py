"""Seeded synthetic corpora with known ground truth, for tests and demos."""

from __future__ import annotations

import math
import random
import string
from dataclasses import dataclass
from typing import List, Tuple

from .corpus import AuthorProfile, Corpus, PaperRecord, RefEntry, normalize_reference
from .forensics import SpikeFilterConfig
from .refnet import SimilarityConfig

_SYLLABLES = [
    "ka", "lo", "mi", "ren", "sto", "vel", "an", "dor", "pe", "qui", "tra", "bel",
    "zu", "ni", "cor", "ha", "mun", "sel", "ti", "gra", "pho", "lex", "ur", "ov",
]
_JOURNALS = [
    "Journal of Applied Systems", "Computational Letters", "Annals of Data",
    "Review of Networks", "International Journal of Modelling", "Acta Informatica Nova",
]


def _word(rng: random.Random, lo=2, hi=4) -> str:
    return "".join(rng.choice(_SYLLABLES) for _ in range(rng.randint(lo, hi)))


def random_reference(rng: random.Random) -> str:
    """A plausible-looking reference string, roughly 60 to 160 characters."""
    authors = ", ".join(
        f"{_word(rng).capitalize()}, {rng.choice(string.ascii_uppercase)}."
        for _ in range(rng.randint(1, 3))
    )
    title = " ".join(_word(rng) for _ in range(rng.randint(4, 10))).capitalize()
    return (
        f"{authors} ({rng.randint(1980, 2023)}). {title}. {rng.choice(_JOURNALS)}, "
        f"{rng.randint(1, 60)}({rng.randint(1, 12)}), {rng.randint(1, 400)}-{rng.randint(401, 900)}."
    )


def add_typos(raw: str, rng: random.Random, n_edits: int) -> str:
    """Substitute ``n_edits`` distinct letters so the normalized form is exactly ``n_edits`` edits away."""
    chars = list(raw)
    letters = [i for i, c in enumerate(chars) if c.isascii() and c.isalpha()]
    for i in rng.sample(letters, min(n_edits, len(letters))):
        old = chars[i].lower()
        chars[i] = rng.choice([c for c in string.ascii_lowercase if c != old])
    return "".join(chars)


def safe_typo_budget(raw: str, config: SimilarityConfig = SimilarityConfig()) -> int:
    """Largest substitution count that keeps a string matching its original."""
    return max(0, config.max_distance(len(normalize_reference(raw))))


def benign_papers(n_papers: int, refs_per_paper: int, seed: int = 0, pool_size=None, typo_rate: float = 0.1) -> List[PaperRecord]:
    """Papers citing references drawn uniformly from a shared pool.

    A fraction ``typo_rate`` of citations carry small typos that stay within
    the matching threshold.
    """
    rng = random.Random(seed)
    pool_size = pool_size or max(1, n_papers * refs_per_paper // 3)
    pool = [random_reference(rng) for _ in range(pool_size)]
    width = len(str(n_papers))
    papers = []
    for i in range(n_papers):
        bib = []
        for raw in rng.sample(pool, min(refs_per_paper, pool_size)):
            if rng.random() < typo_rate:
                raw = add_typos(raw, rng, rng.randint(1, max(1, safe_typo_budget(raw))))
            bib.append(RefEntry(raw))
        papers.append(PaperRecord(f"bg{i:0{width}d}", _word(rng).capitalize(), 2023, bibliography=tuple(bib)))
    return papers


@dataclass
class PlantedCluster:
    corpus: Corpus
    cited_author: str
    citing_paper_ids: Tuple[str, ...]
    block_size: int


def planted_cluster_corpus(
    n_papers: int = 200,
    n_citing: int = 5,
    block_size: int = 30,
    seed: int = 0,
    background_refs: int = 30,
    pool_factor: int = 60,
    venue: str = "J",
) -> PlantedCluster:
    """One bulk-citation cluster hidden in a benign journal-like corpus.

    ``n_citing`` papers each carry the same ``block_size`` references to works
    of one author (each copy either verbatim or a typo variant inside the match budget)
    plus private filler references. The remaining papers draw from a shared
    pool of ``pool_factor`` references per background paper, each written by
    its own background author, so no background author is cited in bulk.
    """
    rng = random.Random(seed)
    target = "A.J."
    authors = [
        AuthorProfile(target, "A. J.", interests=("networks",),
                      paper_ids=tuple(f"aj{i:02d}" for i in range(block_size)),
                      annual_citations={2022: 3, 2023: 10 * n_citing * block_size})
    ]

    papers = []
    block = []
    for i in range(block_size):
        pid = f"aj{i:02d}"
        title = " ".join(_word(rng) for _ in range(6)).capitalize()
        papers.append(PaperRecord(pid, title, 2015 + i % 8, author_ids=(target,), venue="Other"))
        block.append((pid, f"J., A. ({2015 + i % 8}). {title}. {rng.choice(_JOURNALS)}, {i + 1}(1), 1-10."))

    # one typo variant per entry keeps every pair of copies within the budget
    variants = [(wid, raw, add_typos(raw, rng, safe_typo_budget(raw))) for wid, raw in block]
    citing_ids = []
    for c in range(n_citing):
        pid = f"cit{c}"
        bib = [
            RefEntry(typo if rng.random() < 0.5 else raw, resolved_paper_id=wid)
            for wid, raw, typo in variants
        ]
        bib.extend(RefEntry(f"{random_reference(rng)} private {pid}-{k}") for k in range(5))
        papers.append(PaperRecord(pid, _word(rng).capitalize(), 2023, venue=venue, page_count=2,
                                  bibliography=tuple(bib)))
        citing_ids.append(pid)

    n_background = n_papers - len(papers)
    pool = [(random_reference(rng), f"bga{i:05d}") for i in range(max(background_refs, pool_factor * n_background))]
    authors.extend(AuthorProfile(aid, aid, interests=("misc",)) for _, aid in pool)
    for b in range(n_background):
        bib = []
        for raw, aid in rng.sample(pool, background_refs):
            if rng.random() < 0.1:
                raw = add_typos(raw, rng, rng.randint(1, max(1, safe_typo_budget(raw))))
            bib.append(RefEntry(raw, resolved_author_ids=(aid,)))
        papers.append(PaperRecord(f"bg{b:03d}", _word(rng).capitalize(), 2023, venue=venue,
                                  bibliography=tuple(bib)))
    return PlantedCluster(Corpus(authors, papers), target, tuple(citing_ids), block_size)


SPIKE_LABELS = ("qualifies", "low_total", "few_publications", "low_ratio", "low_share")


def labeled_spike_profile(label: str, rng: random.Random, idx: int = 0,
                          config: SpikeFilterConfig = SpikeFilterConfig()) -> AuthorProfile:
    """A profile that passes every spike gate, or fails exactly the one named by ``label``.

    Built for configs with ``min_share_of_total <= 0.7``; each construction
    is checked with direct arithmetic before returning.
    """
    if label not in SPIKE_LABELS:
        raise ValueError(f"unknown label {label!r}")
    R, S = config.min_yoy_ratio, config.min_share_of_total
    T, P = config.min_total_citations, config.min_publications
    pubs = rng.randint(0, P - 1) if label == "few_publications" else P + rng.randint(0, 40)

    if label == "low_ratio":
        # no zeros and every year-over-year factor strictly below R
        counts = [rng.randint(5, 20)]
        while len(counts) < 5 or sum(counts) < T:
            factor = rng.uniform(0.8, min(3.0, 0.9 * R))
            counts.append(max(1, int(counts[-1] * factor)))
        assert all(b < R * a for a, b in zip(counts, counts[1:]))
    elif label == "low_share":
        prev = rng.randint(1, 10)
        spike = math.ceil(R * prev) + rng.randint(0, prev)
        counts = [prev] * rng.randint(1, 4) + [spike]
        # equal years after the spike dilute its share; none of them is a jump
        counts += [spike] * (math.ceil(1 / S) + rng.randint(0, 3))
        while sum(counts) < T:
            counts.append(spike)
        assert spike < S * sum(counts)
    else:
        prev = rng.randint(1, 3) if label == "low_total" else rng.randint(1, 10)
        spike = math.ceil(R * prev) + rng.randint(0, 5)
        before = [prev] * rng.randint(1, 4)
        tail = [rng.randint(1, 5) for _ in range(rng.randint(0, 3))]
        if label != "low_total":
            spike = max(spike, T + rng.randint(0, 500) - sum(before) - sum(tail))
        counts = before + [spike] + tail
        assert spike >= R * prev
        if label == "low_total":
            assert sum(counts) < T
        else:
            assert sum(counts) >= T and spike >= S * sum(counts)
    start = rng.randint(1990, 2015)
    history = {start + i: c for i, c in enumerate(counts)}
    return AuthorProfile(f"{label}-{idx:04d}", label, paper_ids=tuple(f"p{i}" for i in range(pubs)),
                         annual_citations=history)


def labeled_spike_suite(n: int = 500, seed: int = 0, config: SpikeFilterConfig = SpikeFilterConfig()):
    """``n`` profiles cycling through :data:`SPIKE_LABELS`; returns (profile, should_flag) pairs."""
    rng = random.Random(seed)
    out = []
    for i in range(n):
        label = SPIKE_LABELS[i % len(SPIKE_LABELS)]
        out.append((labeled_spike_profile(label, rng, i, config), label == "qualifies"))
    return out


@dataclass
class PlantedSpikes:
    corpus: Corpus
    planted: Tuple[str, ...]


def planted_spike_corpus(n_planted: int = 2, n_benign: int = 12, seed: int = 0) -> PlantedSpikes:
    """Authors with both a citation spike and bulk-citing papers, hidden among decoys.

    Decoys fail one of the two conditions: some spike but are cited thinly,
    others are cited in bulk by a steady profile.
    """
    rng = random.Random(seed)
    authors, papers = [], []
    citer = "citer"
    authors.append(AuthorProfile(citer, "Citer", interests=("misc",)))

    def add_author(aid, spike, bulk):
        n_works = rng.randint(20, 30)
        works = [f"{aid}-w{i:02d}" for i in range(n_works)]
        for w in works:
            papers.append(PaperRecord(w, f"work {w}", 2012, author_ids=(aid,)))
        n_citing = rng.randint(3, 6)
        per_paper = rng.randint(18, n_works) if bulk else rng.randint(1, 5)
        for c in range(n_citing):
            cited = rng.sample(works, per_paper)
            bib = [RefEntry(f"{aid}. Work {w}. 2012.", resolved_paper_id=w) for w in cited]
            papers.append(PaperRecord(f"{aid}-c{c}", f"citing {c}", 2021, author_ids=(citer,),
                                      bibliography=tuple(bib)))
        if spike:
            history = {2018: 5, 2019: 6, 2020: 8, 2021: 400 + rng.randint(0, 200)}
        else:
            history = {y: 60 + rng.randint(0, 20) for y in range(2015, 2022)}
        authors.append(AuthorProfile(aid, aid, interests=("misc",), paper_ids=tuple(works),
                                     annual_citations=history))

    planted = []
    for i in range(n_planted):
        aid = f"planted{i:02d}"
        add_author(aid, spike=True, bulk=True)
        planted.append(aid)
    for i in range(n_benign):
        add_author(f"decoy{i:02d}", spike=i % 2 == 0, bulk=i % 2 == 1)
    return PlantedSpikes(Corpus(authors, papers), tuple(planted))
