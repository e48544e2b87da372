#!/usr/bin/env python3
"""Anatomy of one forward pass through the attention encoder.

Builds a tiny model, shows per-head attention distributions over a class's
subgraphs, the concatenated context vector, and the Siamese cosine score.
"""

from pathlib import Path

import numpy as np

from ontogat import GatConfig, SiameseModel, attention_coefficients, read_ontology
from ontogat.embeddings import load_embeddings, merge_tables
from ontogat.neighborhood import build_all_neighborhoods
from ontogat.pipeline import build_feature_table

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

onto_a = read_ontology(str(FIXTURES / "toy" / "confA.json"))
onto_b = read_ontology(str(FIXTURES / "toy" / "confB.json"))
table = merge_tables(
    [
        load_embeddings(str(FIXTURES / "toy" / "confA.emb")),
        load_embeddings(str(FIXTURES / "toy" / "confB.emb")),
    ]
)
features = build_feature_table([onto_a, onto_b], table, "token-mean")
graphs = {**build_all_neighborhoods(onto_a), **build_all_neighborhoods(onto_b)}

model = SiameseModel.init(GatConfig(feature_dim=table.dim, hidden_dim=8, output_dim=32), seed=0)

centre = "http://example.org/confA#Person"
graph = graphs[centre]
print(f"attention over the subgraphs of {onto_a.entity(centre).label}:")
for head, sub in zip(model.heads, graph.subgraphs):
    if not sub.members:
        print(f"  {sub.kind:22s} (empty -> zero block)")
        continue
    alpha = attention_coefficients(
        head, features.lookup(centre), [features.lookup(m) for m in sub.members]
    )
    weights = ", ".join(
        f"{onto_a.entity(m).label}={w:.3f}" for m, w in zip(sub.members, alpha)
    )
    print(f"  {sub.kind:22s} {weights}")

context = model.gat_forward(graph, features)
encoding = model.encode(graph, features)
print(f"\ncontext vector: length {context.shape[0]} (5 heads x 8), "
      f"nonzero blocks: {int(np.sum(np.abs(context.reshape(5, -1)).sum(axis=1) > 0))}")
print(f"encoding: length {encoding.shape[0]}")

pairs = [
    ("http://example.org/confA#ConferenceMember", "http://example.org/confB#MemberOfConference"),
    ("http://example.org/confA#Author", "http://example.org/confB#Writer"),
    ("http://example.org/confA#Paper", "http://example.org/confB#Human"),
]
print("\nSiamese cosine (shared weights on both branches):")
for left, right in pairs:
    score = model.score(graphs[left], graphs[right], features)
    print(f"  {onto_a.entity(left).label} / {onto_b.entity(right).label}: {score:+.3f}")
