"""DOT and CSV serialization of reference networks."""

from __future__ import annotations

import csv
from pathlib import Path

from .network import RefMatchNetwork


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(network: RefMatchNetwork, name: str = "refnet") -> str:
    lines = [f"graph {name} {{"]
    for node in sorted(network.nodes):
        lines.append(f"  {_dot_id(node)};")
    for (a, b), w in sorted(network.edges.items()):
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)} [weight={w}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(network: RefMatchNetwork, path, name: str = "refnet") -> None:
    Path(path).write_text(to_dot(network, name), encoding="utf-8")


def write_csv(network: RefMatchNetwork, directory, component_of=None) -> None:
    """Write ``nodes.csv`` and ``edges.csv`` (``src,dst,weight``) into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / "nodes.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["paper_id", "component_id"] if component_of else ["paper_id"])
        for node in sorted(network.nodes):
            w.writerow([node, component_of[node]] if component_of else [node])
    with open(directory / "edges.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["src", "dst", "weight"])
        for (a, b), weight in sorted(network.edges.items()):
            w.writerow([a, b, weight])
