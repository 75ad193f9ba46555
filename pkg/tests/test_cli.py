import json
import subprocess
import sys

import pytest

from citeforensics.cli import main
from citeforensics.corpus import AuthorProfile, Corpus, PaperRecord, RefEntry, dump_corpus
from citeforensics.synthetic import planted_cluster_corpus, planted_spike_corpus

from helpers import bulk_corpus, write_jsonl


def dump(corpus, tmp_path, name="c"):
    a, p = tmp_path / f"{name}_authors.jsonl", tmp_path / f"{name}_papers.jsonl"
    dump_corpus(corpus, a, p)
    return ["--authors", str(a), "--papers", str(p)]


def run(argv, capsys=None):
    code = main([str(x) for x in argv])
    return code, (capsys.readouterr() if capsys else None)


# ---------------------------------------------------------------- validate

def test_validate_ok(tmp_path, capsys):
    code, out = run(["validate", *dump(bulk_corpus(3, 3), tmp_path)], capsys)
    assert code == 0
    assert json.loads(out.out) == {"valid": True, "authors": 2, "papers": 6}


def test_validate_dangling(tmp_path, capsys):
    write_jsonl(tmp_path / "a.jsonl", [{"author_id": "A"}])
    write_jsonl(tmp_path / "p.jsonl", [
        {"paper_id": "p1", "year": 2020, "author_ids": ["A"],
         "bibliography": [{"raw": "x", "resolved_paper_id": "ghost-42"}]},
    ])
    code, out = run(["validate", "--authors", tmp_path / "a.jsonl", "--papers", tmp_path / "p.jsonl"], capsys)
    assert code == 2
    report = json.loads(out.out)
    assert report["valid"] is False
    assert any("ghost-42" in e for e in report["errors"])


def test_validate_unreadable(tmp_path, capsys):
    code, out = run(["validate", "--authors", tmp_path / "missing.jsonl", "--papers", tmp_path / "p.jsonl"], capsys)
    assert code == 1
    assert "missing.jsonl" in out.err


def test_validate_malformed_line(tmp_path, capsys):
    (tmp_path / "a.jsonl").write_text('{"author_id": "A"}\n{oops\n')
    write_jsonl(tmp_path / "p.jsonl", [])
    code, out = run(["validate", "--authors", tmp_path / "a.jsonl", "--papers", tmp_path / "p.jsonl"], capsys)
    assert code == 2
    assert ":2" in out.out or "line 2" in out.out


# ----------------------------------------------------------------- metrics

def read_metrics(out_dir):
    return {row["author_id"]: row for row in json.loads((out_dir / "metrics.json").read_text())["authors"]}


def test_metrics_45_by_45(tmp_path):
    out = tmp_path / "out"
    assert run(["metrics", *dump(bulk_corpus(45, 45), tmp_path), "--out", out]) == (0, None)
    rows = read_metrics(out)
    assert rows["A"]["c2_index"] == 45
    assert rows["A"]["c2_percentage"] == 1.0
    lines = (out / "metrics.csv").read_text().splitlines()
    assert lines[0].startswith("author_id,c2_index,c2_percentage,adjusted_c2")
    assert [line.split(",")[0] for line in lines[1:]] == ["A", "Z"]
    assert (out / "ccdf_c2_index.csv").read_text().splitlines()[0] == "threshold,count"


def test_metrics_uncited_author(tmp_path):
    corpus = Corpus([AuthorProfile("solo", "Solo")], [PaperRecord("p", "t", 2020, author_ids=("solo",))])
    out = tmp_path / "out"
    assert run(["metrics", *dump(corpus, tmp_path), "--out", out])[0] == 0
    row = read_metrics(out)["solo"]
    assert row["c2_index"] == 0 and row["c2_percentage"] == 0


def test_metrics_empty_corpus(tmp_path, capsys):
    code, out = run(["metrics", *dump(Corpus([], []), tmp_path), "--out", tmp_path / "o"], capsys)
    assert code == 2 and "no authors" in out.out


def test_metrics_sampling_requires_seed(tmp_path, capsys):
    args = ["metrics", *dump(bulk_corpus(2, 2), tmp_path), "--out", tmp_path / "o", "--sample-per-interest", 1]
    assert run(args, capsys)[0] == 3
    assert run([*args, "--seed", 4], capsys)[0] == 0
    assert len(read_metrics(tmp_path / "o")) == 2  # one per interest, two interests


def test_metrics_repeatable(tmp_path):
    args = dump(bulk_corpus(7, 5), tmp_path)
    for name in ("r1", "r2"):
        assert run(["metrics", *args, "--out", tmp_path / name])[0] == 0
    for f in ("metrics.csv", "metrics.json", "ccdf_c2_index.csv", "ccdf_adjusted_c2.csv"):
        assert (tmp_path / "r1" / f).read_bytes() == (tmp_path / "r2" / f).read_bytes()


# -------------------------------------------------------------------- flag

def flagged_ids(out_dir):
    return [f["author_id"] for f in json.loads((out_dir / "flags.json").read_text())["flagged"]]


def test_flag_planted(tmp_path):
    planted = planted_spike_corpus(n_planted=3, n_benign=10, seed=5)
    out = tmp_path / "out"
    assert run(["flag", *dump(planted.corpus, tmp_path), "--out", out])[0] == 0
    report = json.loads((out / "flags.json").read_text())
    assert sorted(flagged_ids(out)) == sorted(planted.planted)
    adj = [(-f["c2"]["adjusted_c2"], f["author_id"]) for f in report["flagged"]]
    assert adj == sorted(adj)
    assert "not a finding" in report["note"]


def test_flag_benign(tmp_path, capsys):
    planted = planted_spike_corpus(n_planted=0, n_benign=8, seed=1)
    out = tmp_path / "out"
    assert run(["flag", *dump(planted.corpus, tmp_path), "--out", out], capsys)[0] == 0
    assert flagged_ids(out) == []


def test_flag_loosened_superset(tmp_path):
    planted = planted_spike_corpus(n_planted=2, n_benign=10, seed=2)
    args = dump(planted.corpus, tmp_path)
    run(["flag", *args, "--out", tmp_path / "strict"])
    run(["flag", *args, "--out", tmp_path / "loose", "--n-threshold", 3, "--min-yoy-ratio", 1.1,
         "--min-share-of-total", 0.1, "--min-total-citations", 50])
    strict, loose = set(flagged_ids(tmp_path / "strict")), set(flagged_ids(tmp_path / "loose"))
    assert strict <= loose and len(loose) > len(strict)


# ----------------------------------------------------------------- network

def test_network_planted_k5(tmp_path):
    planted = planted_cluster_corpus(n_papers=60, seed=1)
    out = tmp_path / "out"
    assert run(["network", *dump(planted.corpus, tmp_path), "--out", out, "--format", "csv,json,dot"])[0] == 0
    summary = json.loads((out / "findings.json").read_text())
    (finding,) = summary["findings"]
    assert finding["citing_paper_ids"] == list(planted.citing_paper_ids)
    assert finding["consistency"] == 1.0 and finding["mention_count"] == 150
    comps = [c["paper_ids"] for c in summary["components"]]
    assert list(planted.citing_paper_ids) in comps
    edges = (out / "edges.csv").read_text().splitlines()
    assert sum(1 for e in edges if e.startswith("cit")) == 10
    assert (out / "network.dot").read_text().startswith("graph refnet {")
    assert (out / "edges.csv").exists() and (out / "nodes.csv").exists()


def test_network_no_shared_refs(tmp_path):
    papers = [PaperRecord(f"p{i}", "t", 2023, bibliography=(RefEntry(f"unique reference number {i} " * 3),))
              for i in range(4)]
    out = tmp_path / "out"
    assert run(["network", *dump(Corpus([], papers), tmp_path), "--out", out])[0] == 0
    assert (out / "edges.csv").read_text() == "src,dst,weight\n"
    assert json.loads((out / "findings.json").read_text())["edges"] == 0


def test_network_venue_year_filter(tmp_path):
    shared = (RefEntry("Shared, A. (2010). A reference seen in several papers. Journal, 1, 1-2."),)
    papers = [
        PaperRecord("j23a", "t", 2023, venue="J", bibliography=shared),
        PaperRecord("j23b", "t", 2023, venue="J", bibliography=shared),
        PaperRecord("j22", "t", 2022, venue="J", bibliography=shared),
        PaperRecord("k23", "t", 2023, venue="K", bibliography=shared),
    ]
    out = tmp_path / "out"
    assert run(["network", *dump(Corpus([], papers), tmp_path), "--out", out, "--venue", "J", "--year", 2023])[0] == 0
    summary = json.loads((out / "findings.json").read_text())
    assert summary["papers"] == 2 and summary["edges"] == 1
    assert (out / "edges.csv").read_text() == "src,dst,weight\nj23a,j23b,1\n"


def test_network_dot_only_when_requested(tmp_path):
    out = tmp_path / "out"
    assert run(["network", *dump(bulk_corpus(2, 2), tmp_path), "--out", out])[0] == 0
    assert not (out / "network.dot").exists()


# ------------------------------------------------------------------ sample

def edge_file(path, edges):
    path.write_text("".join(f"{a}\t{b}\n" for a, b in edges))
    return path


def read_sample(out_dir):
    lines = (out_dir / "sample.csv").read_text().splitlines()
    assert lines[0] == "depth,new_authors"
    return [int(line.split(",")[1]) for line in lines[1:]]


def test_sample_path(tmp_path):
    g = edge_file(tmp_path / "g.tsv", [("a", "b"), ("b", "c"), ("c", "d")])
    assert run(["sample", "--graph", g, "--seeds", "a", "--depth", 2, "--out", tmp_path / "o"])[0] == 0
    assert read_sample(tmp_path / "o") == [1, 1, 1]
    assert json.loads((tmp_path / "o" / "sample.json").read_text()) == {"0": ["a"], "1": ["b"], "2": ["c"]}


def test_sample_star(tmp_path):
    g = edge_file(tmp_path / "g.tsv", [("hub", f"leaf{i}") for i in range(7)])
    assert run(["sample", "--graph", g, "--seeds", "hub", "--depth", 1, "--out", tmp_path / "o"])[0] == 0
    assert read_sample(tmp_path / "o") == [1, 7]


def test_sample_from_corpus_coauthors(tmp_path):
    corpus = Corpus(
        [AuthorProfile(x, x) for x in "abc"],
        [PaperRecord("p1", "t", 2020, author_ids=("a", "b")), PaperRecord("p2", "t", 2020, author_ids=("b", "c"))],
    )
    assert run(["sample", *dump(corpus, tmp_path), "--seeds", "a", "--out", tmp_path / "o"])[0] == 0
    assert read_sample(tmp_path / "o") == [1, 1, 1]


def test_sample_unknown_seed(tmp_path, capsys):
    g = edge_file(tmp_path / "g.tsv", [("a", "b")])
    code, out = run(["sample", "--graph", g, "--seeds", "a,zed", "--out", tmp_path / "o"], capsys)
    assert code == 3 and "zed" in out.err


# ------------------------------------------------------------------ config

def test_toml_precedence(tmp_path):
    planted = planted_spike_corpus(n_planted=2, n_benign=6, seed=3)
    args = dump(planted.corpus, tmp_path)
    cfg = tmp_path / "cfg.toml"
    cfg.write_text('n_threshold = 3\n[spike]\nmin_yoy_ratio = 50.0\nmin_total_citations = 100\n')
    run(["flag", *args, "--config", cfg, "--out", tmp_path / "toml"])
    report = json.loads((tmp_path / "toml" / "flags.json").read_text())
    assert report["config"]["n_threshold"] == 3 and report["config"]["min_yoy_ratio"] == 50.0
    run(["flag", *args, "--config", cfg, "--min-yoy-ratio", 2, "--out", tmp_path / "flag"])
    report = json.loads((tmp_path / "flag" / "flags.json").read_text())
    assert report["config"]["min_yoy_ratio"] == 2.0
    assert report["config"]["min_total_citations"] == 100 and report["config"]["n_threshold"] == 3
    assert report["config"]["min_publications"] == 10


def test_toml_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "cfg.toml"
    cfg.write_text("bogus = 1\n")
    assert run(["validate", *dump(bulk_corpus(1, 1), tmp_path), "--config", cfg], capsys)[0] == 3


# -------------------------------------------------------------- bad usage

@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["metrics", "--window", "soon"],
    ["validate"],
    ["network", "--authors", "a", "--papers", "p", "--format", "png"],
    ["flag", "--authors", "a", "--papers", "p", "--min-yoy-ratio", "-1"],
])
def test_bad_arguments(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 3


def test_bad_thread_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CITEFORENSICS_THREADS", "many")
    assert run(["validate", *dump(bulk_corpus(1, 1), tmp_path)], capsys)[0] == 3


def test_console_script(tmp_path):
    args = dump(bulk_corpus(2, 2), tmp_path)
    proc = subprocess.run([sys.executable, "-m", "citeforensics.cli", "validate", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["valid"]


# ------------------------------------------------------------------ report

def test_report_bundles_outputs(tmp_path):
    out = tmp_path / "out"
    assert run(["report", *dump(bulk_corpus(4, 4), tmp_path), "--out", out])[0] == 0
    listing = json.loads((out / "report.json").read_text())["files"]
    for name in ("metrics.csv", "metrics.json", "flags.json", "findings.json", "edges.csv"):
        assert name in listing
