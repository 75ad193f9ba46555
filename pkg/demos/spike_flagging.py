"""From citation histories to a short list of authors worth a closer look.

The spike filter looks only at yearly totals. Flagging additionally requires
a citing paper that references many distinct works of the author.
Flags are irregularity indicators, nothing more.
"""

import json

from citeforensics.forensics import (
    SpikeFilterConfig,
    citing_paper_forensics,
    flag_suspicious,
    spike_filter,
    top_citing_papers,
)
from citeforensics.synthetic import labeled_spike_suite, planted_spike_corpus

config = SpikeFilterConfig()
print(config)

# a few labeled profiles; each label names the single gate it fails
for profile, expected in labeled_spike_suite(10, seed=1):
    flag = spike_filter(profile, config)
    print(f"{profile.author_id:24s} expected={expected!s:5s} got={flag is not None}",
          "" if flag is None else f"year={flag.spike_year} share={flag.share_of_total:.2f}")

# the yearly series of one qualifying profile
profile = labeled_spike_suite(1, seed=1)[0][0]
print(profile.annual_citations)

planted = planted_spike_corpus(n_planted=2, n_benign=8, seed=4)
corpus = planted.corpus
print("planted:", planted.planted)

flags = flag_suspicious(corpus, config, n_threshold=18)
for author, evidence in flags:
    print(author, json.dumps(evidence.as_dict()["spike"]), "c2 =", evidence.c2.c2_index)

# decoys spike without bulk citers, or are bulk cited without a spike
decoys = [a.author_id for a in corpus.iter_authors() if a.author_id.startswith("decoy")]
print("decoys with a spike:", [d for d in decoys if spike_filter(corpus.author(d), config)])

author = flags[0][0]
for pid in top_citing_papers(corpus, author, k=3):
    print(citing_paper_forensics(corpus, author, pid).as_dict())

# loosening thresholds can only add authors
loose = flag_suspicious(corpus, SpikeFilterConfig(min_yoy_ratio=2.0), n_threshold=5)
print(len(flags), "flagged by default,", len(loose), "with loose thresholds")
