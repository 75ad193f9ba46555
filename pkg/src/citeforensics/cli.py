"""Batch command-line front end.

Exit codes: 0 success, 1 I/O failure, 2 invalid corpus or input data,
3 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import List, Optional

from . import metrics as m
from ._workers import parallel_map, worker_count
from .corpus import CoauthorGraph, CorpusError, CorpusValidationError, load_corpus, snowball_sample
from .forensics import SpikeFilterConfig, flag_suspicious
from .refnet import (
    SimilarityConfig,
    build_network,
    connected_components,
    scan_clusters,
    write_csv,
    write_dot,
)

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_USAGE = 0, 1, 2, 3
FORMATS = ("csv", "json", "dot")
INDICATOR_NOTE = "irregularity indicators; not a finding of misconduct"


class UsageError(Exception):
    pass


class InvalidInput(Exception):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass
class RunConfig:
    authors: Optional[str] = None
    papers: Optional[str] = None
    out: str = "."
    formats: List[str] = field(default_factory=lambda: ["csv", "json"])
    seed: Optional[int] = None
    threads: Optional[int] = None
    spike: SpikeFilterConfig = field(default_factory=SpikeFilterConfig)
    n_threshold: int = 18
    similarity: SimilarityConfig = field(default_factory=SimilarityConfig)
    mention_threshold: int = 10
    components: int = 30
    venue: Optional[str] = None
    year: Optional[int] = None
    window: int = 4
    sample_per_interest: Optional[int] = None
    graph: Optional[str] = None
    seeds: List[str] = field(default_factory=list)
    depth: int = 10


_SPIKE_KEYS = {f.name for f in fields(SpikeFilterConfig)}
_SIM_KEYS = {"threshold", "enable_length_prune"}


def _parse_formats(value) -> List[str]:
    items = value if isinstance(value, list) else str(value).split(",")
    out = []
    for item in items:
        item = item.strip()
        if item not in FORMATS:
            raise UsageError(f"unknown format {item!r}; choose from {', '.join(FORMATS)}")
        if item not in out:
            out.append(item)
    return out


def _apply(cfg: RunConfig, values: dict) -> RunConfig:
    """Overlay flat or sectioned settings (``spike.*``, ``similarity.*``) onto ``cfg``."""
    spike, sim, top = {}, {}, {}
    for key, value in values.items():
        if value is None:
            continue
        if key == "spike" and isinstance(value, dict):
            spike.update(value)
        elif key == "similarity" and isinstance(value, dict):
            sim.update(value)
        elif key in _SPIKE_KEYS:
            spike[key] = value
        elif key in _SIM_KEYS:
            sim[key] = value
        else:
            top[key] = value
    unknown = set(spike) - _SPIKE_KEYS
    unknown |= set(sim) - _SIM_KEYS
    unknown |= set(top) - {f.name for f in fields(RunConfig)} - {"format"}
    if unknown:
        raise UsageError(f"unknown setting(s): {', '.join(sorted(unknown))}")
    if "format" in top:
        top["formats"] = _parse_formats(top.pop("format"))
    elif "formats" in top:
        top["formats"] = _parse_formats(top["formats"])
    if isinstance(top.get("seeds"), str):
        top["seeds"] = [s for s in top["seeds"].split(",") if s]
    try:
        if spike:
            top["spike"] = replace(cfg.spike, **spike)
        if sim:
            top["similarity"] = replace(cfg.similarity, **sim)
        return replace(cfg, **top)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then the TOML file named by ``--config``, then explicit flags."""
    cfg = RunConfig()
    if getattr(args, "config", None):
        try:
            with open(args.config, "rb") as fh:
                cfg = _apply(cfg, tomllib.load(fh))
        except tomllib.TOMLDecodeError as exc:
            raise UsageError(f"{args.config}: {exc}") from None
    flags = {k: v for k, v in vars(args).items() if k not in ("config", "command", "func")}
    return _apply(cfg, flags)


def _load(cfg: RunConfig):
    if not cfg.authors or not cfg.papers:
        raise UsageError("--authors and --papers are required")
    return load_corpus(cfg.authors, cfg.papers)


def _out_dir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_json(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n", encoding="utf-8")


def _write_rows(path: Path, header, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


# ---------------------------------------------------------------- validate

def cmd_validate(cfg: RunConfig) -> int:
    corpus = _load(cfg)
    n_authors, n_papers = corpus.counts
    print(json.dumps({"valid": True, "authors": n_authors, "papers": n_papers}))
    return EXIT_OK


# ----------------------------------------------------------------- metrics

METRIC_COLUMNS = [
    "author_id", "c2_index", "c2_percentage", "adjusted_c2", "h_index", "peak_year",
    "resolved_citations", "profile_citations",
    "c2_index_incl_self", "c2_percentage_incl_self", "adjusted_c2_incl_self",
]


def author_metrics(corpus, author_id: str, window: int = 4) -> dict:
    counts = m.citing_paper_counts(corpus, author_id)
    excl = m.c2_summary(counts, include_self=False)
    incl = m.c2_summary(counts, include_self=True)
    profile = corpus.author(author_id)
    try:
        peak = m.trajectory(profile, window).peak_year
    except m.NotComputable:
        peak = None
    return {
        "author_id": author_id,
        "c2_index": excl.c2_index,
        "c2_percentage": float(excl.c2_percentage),
        "adjusted_c2": float(excl.adjusted_c2),
        "h_index": m.h_index(m.paper_citation_counts(corpus, author_id)),
        "peak_year": peak,
        "resolved_citations": excl.total_citations,
        "profile_citations": profile.total_citations,
        "c2_index_incl_self": incl.c2_index,
        "c2_percentage_incl_self": float(incl.c2_percentage),
        "adjusted_c2_incl_self": float(incl.adjusted_c2),
    }


def stratified_authors(corpus, per_interest: int, seed: int) -> List[str]:
    """Up to ``per_interest`` random authors per research interest, sorted."""
    rng = random.Random(seed)
    by_interest = {}
    for a in corpus.iter_authors():
        for topic in a.interests:
            by_interest.setdefault(topic, []).append(a.author_id)
    chosen = set()
    for topic in sorted(by_interest):
        pool = by_interest[topic]
        chosen.update(rng.sample(pool, min(per_interest, len(pool))))
    return sorted(chosen)


def cmd_metrics(cfg: RunConfig, corpus=None) -> int:
    corpus = corpus if corpus is not None else _load(cfg)
    if not corpus.authors:
        raise InvalidInput(["no authors"])
    ids = sorted(corpus.authors)
    if cfg.sample_per_interest is not None:
        if cfg.seed is None:
            raise UsageError("--sample-per-interest requires --seed")
        ids = stratified_authors(corpus, cfg.sample_per_interest, cfg.seed)
    rows = parallel_map(lambda a: author_metrics(corpus, a, cfg.window), ids, cfg.threads)
    out = _out_dir(cfg)
    if "csv" in cfg.formats:
        _write_rows(out / "metrics.csv", METRIC_COLUMNS,
                    [["" if r[c] is None else r[c] for c in METRIC_COLUMNS] for r in rows])
    if "json" in cfg.formats:
        _write_json(out / "metrics.json", {
            "note": "c2 columns exclude self-citations; *_incl_self include them; "
                    "resolved_citations is the c2-percentage denominator",
            "authors": rows,
        })
    for column in ("c2_index", "adjusted_c2"):
        values = [r[column] for r in rows]
        _write_rows(out / f"ccdf_{column}.csv", ["threshold", "count"], m.ccdf(values) if values else [])
    print(f"metrics: {len(rows)} author(s) -> {out}")
    return EXIT_OK


# -------------------------------------------------------------------- flag

def flag_report(corpus, cfg: RunConfig) -> dict:
    flagged = flag_suspicious(corpus, cfg.spike, cfg.n_threshold, workers=cfg.threads)
    flagged.sort(key=lambda item: (-item[1].c2.adjusted_c2, item[0]))
    return {
        "note": INDICATOR_NOTE,
        "config": {**asdict(cfg.spike), "n_threshold": cfg.n_threshold},
        "flagged": [{"author_id": aid, **ev.as_dict()} for aid, ev in flagged],
    }


def cmd_flag(cfg: RunConfig, corpus=None) -> int:
    corpus = corpus if corpus is not None else _load(cfg)
    report = flag_report(corpus, cfg)
    out = _out_dir(cfg)
    _write_json(out / "flags.json", report)
    print(f"flag: {len(report['flagged'])} author(s) flagged -> {out / 'flags.json'}")
    return EXIT_OK


# ----------------------------------------------------------------- network

def network_outputs(corpus, cfg: RunConfig, out: Path) -> dict:
    papers = corpus.filter_papers(cfg.venue, cfg.year)
    network = build_network(papers, cfg.similarity, workers=cfg.threads)
    components = connected_components(network)
    findings = scan_clusters(corpus, network, components, cfg.mention_threshold)
    top = {cid: comp for cid, comp in components.items() if cid < cfg.components}
    kept = set().union(*top.values()) if top else set()
    sub = network.subgraph(kept)
    component_of = {pid: cid for cid, comp in top.items() for pid in comp}
    if "dot" in cfg.formats:
        write_dot(sub, out / "network.dot")
    if "csv" in cfg.formats:
        write_csv(sub, out, component_of)
    summary = {
        "note": INDICATOR_NOTE,
        "config": {
            "threshold": cfg.similarity.threshold,
            "mention_threshold": cfg.mention_threshold,
            "components": cfg.components,
            "venue": cfg.venue,
            "year": cfg.year,
        },
        "papers": len(network.nodes),
        "edges": len(network.edges),
        "components": [
            {"component_id": cid, "size": len(comp), "paper_ids": sorted(comp)}
            for cid, comp in sorted(top.items())
        ],
        "findings": [f.as_dict() for f in findings],
    }
    _write_json(out / "findings.json", summary)
    return summary


def cmd_network(cfg: RunConfig) -> int:
    corpus = _load(cfg)
    out = _out_dir(cfg)
    summary = network_outputs(corpus, cfg, out)
    print(f"network: {summary['papers']} paper(s), {summary['edges']} edge(s), "
          f"{len(summary['findings'])} finding(s) -> {out}")
    return EXIT_OK


# ------------------------------------------------------------------ sample

def cmd_sample(cfg: RunConfig) -> int:
    if not cfg.seeds:
        raise UsageError("--seeds is required")
    if cfg.depth < 0:
        raise UsageError("--depth must be >= 0")
    if cfg.graph:
        graph = CoauthorGraph.from_edge_list(cfg.graph)
    else:
        graph = CoauthorGraph.from_corpus(_load(cfg))
    missing = sorted(s for s in cfg.seeds if s not in graph)
    if missing:
        raise UsageError(f"unknown seed(s): {', '.join(missing)}")
    layers = snowball_sample(graph, cfg.seeds, cfg.depth)
    out = _out_dir(cfg)
    _write_rows(out / "sample.csv", ["depth", "new_authors"],
                [[d, len(layers[d])] for d in sorted(layers)])
    _write_json(out / "sample.json", {str(d): sorted(layers[d]) for d in sorted(layers)})
    print(f"sample: {sum(len(v) for v in layers.values())} author(s) over {len(layers)} layer(s) -> {out}")
    return EXIT_OK


# ------------------------------------------------------------------ report

def cmd_report(cfg: RunConfig) -> int:
    corpus = _load(cfg)
    out = _out_dir(cfg)
    cmd_metrics(cfg, corpus)
    cmd_flag(cfg, corpus)
    summary = network_outputs(corpus, cfg, out)
    n_authors, n_papers = corpus.counts
    _write_json(out / "report.json", {
        "note": INDICATOR_NOTE,
        "authors": n_authors,
        "papers": n_papers,
        "files": sorted(p.name for p in out.iterdir() if p.is_file() and p.name != "report.json"),
        "network_findings": len(summary["findings"]),
    })
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "metrics": cmd_metrics,
    "flag": cmd_flag,
    "network": cmd_network,
    "sample": cmd_sample,
    "report": cmd_report,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--authors", default=d, help="authors.jsonl")
    p.add_argument("--papers", default=d, help="papers.jsonl")
    p.add_argument("--out", default=d, help="output directory (default: .)")
    p.add_argument("--format", default=d, help="comma-separated subset of csv,json,dot")
    p.add_argument("--seed", type=int, default=d)
    p.add_argument("--threads", type=int, default=d, help="worker cap (overrides $CITEFORENSICS_THREADS)")
    p.add_argument("--config", default=d, help="TOML config file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="citeforensics", description="Citation-forensics batch commands.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)

    sub.add_parser("validate", parents=[common], help="check a corpus")

    p = sub.add_parser("metrics", parents=[common], help="per-author c2 metrics and CCDFs")
    p.add_argument("--window", type=int, default=argparse.SUPPRESS)
    p.add_argument("--sample-per-interest", type=int, default=argparse.SUPPRESS,
                   help="random authors per research interest (needs --seed)")

    spike = _Parser(add_help=False)
    spike.add_argument("--n-threshold", type=int, default=argparse.SUPPRESS)
    spike.add_argument("--min-total-citations", type=int, default=argparse.SUPPRESS)
    spike.add_argument("--min-publications", type=int, default=argparse.SUPPRESS)
    spike.add_argument("--min-yoy-ratio", type=float, default=argparse.SUPPRESS)
    spike.add_argument("--min-share-of-total", type=float, default=argparse.SUPPRESS)
    sub.add_parser("flag", parents=[common, spike], help="spike filter + concentrated citing papers")

    net = _Parser(add_help=False)
    net.add_argument("--threshold", type=float, default=argparse.SUPPRESS)
    net.add_argument("--mention-threshold", type=int, default=argparse.SUPPRESS)
    net.add_argument("--components", type=int, default=argparse.SUPPRESS)
    net.add_argument("--venue", default=argparse.SUPPRESS)
    net.add_argument("--year", type=int, default=argparse.SUPPRESS)
    sub.add_parser("network", parents=[common, net], help="shared-reference network and cluster scan")

    p = sub.add_parser("sample", parents=[common], help="snowball sample over a co-author graph")
    p.add_argument("--graph", default=argparse.SUPPRESS, help="edge list, one author_id<TAB>author_id per line")
    p.add_argument("--seeds", default=argparse.SUPPRESS, help="comma-separated seed author ids")
    p.add_argument("--depth", type=int, default=argparse.SUPPRESS)

    sub.add_parser("report", parents=[common, spike, net], help="metrics, flag and network together")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        try:
            worker_count(cfg.threads)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"citeforensics: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CorpusValidationError as exc:
        print(json.dumps({"valid": False, "errors": exc.errors}, indent=2))
        return EXIT_INVALID
    except (CorpusError, InvalidInput) as exc:
        errors = exc.errors if isinstance(exc, InvalidInput) else [str(exc)]
        print(json.dumps({"valid": False, "errors": errors}, indent=2))
        return EXIT_INVALID
    except OSError as exc:
        where = f" ({exc.filename})" if getattr(exc, "filename", None) else ""
        print(f"citeforensics: I/O error{where}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # malformed auxiliary inputs such as edge lists or environment settings
        print(f"citeforensics: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
