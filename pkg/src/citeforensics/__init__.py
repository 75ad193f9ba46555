"""Citation-forensics toolkit.

Citation-concentration metrics (c2-index family), citation-spike flagging
and shared-reference cluster detection over local JSONL corpora.
"""

from .corpus import (
    AuthorProfile,
    CoauthorGraph,
    Corpus,
    PaperRecord,
    RefEntry,
    dump_corpus,
    load_corpus,
    normalize_reference,
    snowball_sample,
)
from .forensics import (
    MatchCriteria,
    SpikeFilterConfig,
    citing_paper_forensics,
    find_matched_author,
    flag_suspicious,
    spike_filter,
    top_citing_papers,
)
from .metrics import (
    C2Summary,
    CitingPaperCount,
    NotComputable,
    bipartite_concentration,
    c2_index,
    c2_summary,
    ccdf,
    citing_paper_counts,
    distribution_stats,
    h_index,
    source_discrepancy,
    trajectory,
)
from .refnet import (
    SimilarityConfig,
    build_network,
    connected_components,
    levenshtein_similarity,
    scan_clusters,
    similar,
)

__version__ = "0.1.0"
