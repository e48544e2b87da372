#!/usr/bin/env python3
"""Full conference-track harness over the bundled 7-ontology fixture set.

Trains one model on all 21 pairwise reference alignments (the supervised
track protocol), selects the threshold on held-out validation pairs, matches
every pair, and reports micro-averaged M1/M2/M3 next to a label-cosine-only
baseline run through the identical harness.
"""

from itertools import combinations
from pathlib import Path

from ontogat import GatConfig, SiameseModel, cosine_similarity, match, read_ontology
from ontogat.alignio import cells_to_alignment, read_reference_json
from ontogat.embeddings import load_embeddings, merge_tables
from ontogat.matching import match_label_baseline, rescale_cosine
from ontogat.metrics import aggregate, evaluate, report_rows
from ontogat.neighborhood import build_all_neighborhoods
from ontogat.pipeline import build_feature_table
from ontogat.training import (
    TrainConfig,
    build_dataset,
    select_threshold,
    threshold_from_scores,
    train,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures" / "conference"
NAMES = ["cmt", "conference", "confOf", "edas", "ekaw", "iasted", "sigkdd"]

ontos = {n: read_ontology(str(FIXTURES / f"{n}.json")) for n in NAMES}
table = merge_tables([load_embeddings(str(FIXTURES / "emb" / f"{n}.emb")) for n in NAMES])
features = build_feature_table(list(ontos.values()), table, "token-mean")
graphs = {}
for onto in ontos.values():
    graphs.update(build_all_neighborhoods(onto))
refs = {
    (a, b): read_reference_json(str(FIXTURES / "refs" / f"{a}-{b}.json"))
    for a, b in combinations(NAMES, 2)
}
print(f"{len(NAMES)} ontologies, {len(refs)} test cases, "
      f"{sum(len(c) for c in refs.values())} reference cells")

cfg = TrainConfig(seed=0)
train_set, validation = [], []
for (a, b), cells in refs.items():
    tr, va = build_dataset(ontos[a], ontos[b], cells, cfg)
    train_set += tr
    validation += va

model = SiameseModel.init(GatConfig(feature_dim=table.dim), seed=cfg.seed)
trace = train(model, train_set, cfg, graphs, features)
threshold = select_threshold(model, validation, graphs, features)
print(f"trained 5 epochs on {len(train_set)} pairs; loss {trace[0]:.4f} -> {trace[-1]:.4f}; "
      f"threshold {threshold:.4f}")

baseline_threshold = threshold_from_scores(
    [
        (rescale_cosine(cosine_similarity(features.lookup(p.left), features.lookup(p.right))), p.label)
        for p in validation
    ]
)

for label, matcher in [
    ("attention matcher", lambda a, b: match(a, b, model, threshold, features, graphs=graphs)),
    ("label-cosine baseline", lambda a, b: match_label_baseline(a, b, baseline_threshold, features)),
]:
    print(f"\n{label}:")
    for variant in ("m1", "m2", "m3"):
        named = []
        for (a, b), cells in refs.items():
            system = matcher(ontos[a], ontos[b])
            named.append(
                (f"{a}-{b}", evaluate(system, cells_to_alignment(cells), variant, ontos[a], ontos[b]))
            )
        total = aggregate([r for _, r in named])
        print(f"  {variant.upper()}: P={total.precision:.3f} F0.5={total.f05:.3f} "
              f"F1={total.f1:.3f} F2={total.f2:.3f} R={total.recall:.3f}")

print("\nper-case M1 report (attention matcher):")
named = []
for (a, b), cells in refs.items():
    system = match(ontos[a], ontos[b], model, threshold, features, graphs=graphs)
    named.append((f"{a}-{b}", evaluate(system, cells_to_alignment(cells), "m1", ontos[a], ontos[b])))
for line in report_rows(named):
    print(" ", line)
