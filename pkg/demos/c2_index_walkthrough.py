"""Citation concentration on a toy corpus.

Two authors receive the same number of citations. One is cited a little by
many papers, the other heavily by a few. The h-index cannot tell them apart;
the c2-index can.
"""

from citeforensics.corpus import AuthorProfile, Corpus, PaperRecord, RefEntry
from citeforensics.metrics import (
    bipartite_concentration,
    c2_summary,
    ccdf,
    citing_paper_counts,
    h_index,
    paper_citation_counts,
)


def works_of(author, n):
    return [PaperRecord(f"{author}-w{i:02d}", f"work {i}", 2015, author_ids=(author,)) for i in range(n)]


def cite(pid, author, works):
    bib = tuple(RefEntry(f"{author}. {w}.", resolved_paper_id=w.paper_id) for w in works)
    return PaperRecord(pid, "citing paper", 2022, author_ids=("other",), bibliography=bib)


spread = works_of("spread", 20)
bulk = works_of("bulk", 20)
papers = spread + bulk

# 200 citations to "spread": 200 papers, each citing one work
for i in range(200):
    papers.append(cite(f"s{i:03d}", "spread", [spread[i % 20]]))

# 200 citations to "bulk": 10 papers, each citing all 20 works
for i in range(10):
    papers.append(cite(f"b{i:02d}", "bulk", bulk))

authors = [
    AuthorProfile("spread", "spread", paper_ids=tuple(w.paper_id for w in spread)),
    AuthorProfile("bulk", "bulk", paper_ids=tuple(w.paper_id for w in bulk)),
    AuthorProfile("other", "other"),
]
corpus = Corpus(authors, papers)
print("authors, papers:", corpus.counts)

# h-index over per-paper citation counts: identical for both
for a in ("spread", "bulk"):
    print(a, "h-index", h_index(paper_citation_counts(corpus, a)))

# c2 looks at how many distinct works each citing paper references
for a in ("spread", "bulk"):
    s = c2_summary(citing_paper_counts(corpus, a))
    print(a, "c2 =", s.c2_index, " share =", s.c2_percentage, " adjusted =", s.adjusted_c2)

# all ten citing papers cite the same twenty works: a complete bipartite pattern
print("bipartite concentration (bulk):", bipartite_concentration(corpus, "bulk"))
print("bipartite concentration (spread):", bipartite_concentration(corpus, "spread"))

# plot-ready tail of the per-paper counts
n_values = [c.n for c in citing_paper_counts(corpus, "bulk")] + [c.n for c in citing_paper_counts(corpus, "spread")]
for threshold, count in ccdf(n_values):
    print(f"  n >= {threshold}: {count} citing papers")
