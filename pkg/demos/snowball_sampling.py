"""Collecting a neighbourhood of authors through co-authorship, depth by depth."""

import random

from citeforensics.corpus import CoauthorGraph, snowball_sample

rng = random.Random(3)
people = [f"au{i:03d}" for i in range(300)]

# sparse random collaborations plus a few hubs
edges = set()
for _ in range(450):
    a, b = rng.sample(people, 2)
    edges.add((a, b))
for hub in people[:3]:
    for other in rng.sample(people, 25):
        if other != hub:
            edges.add((hub, other))

graph = CoauthorGraph(edges, people)
print(len(graph), "authors")

layers = snowball_sample(graph, ["au150", "au151"], max_depth=10)
total = 0
for depth in sorted(layers):
    total += len(layers[depth])
    print(f"depth {depth:2d}: {len(layers[depth]):4d} new, {total:4d} total")

# an isolated seed stops at depth 0
loner = CoauthorGraph(set(), ["solo"])
print(snowball_sample(loner, ["solo"], max_depth=5))
