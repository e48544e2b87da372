#!/usr/bin/env python3
"""Train on the toy pair, pick the threshold, match, and score the result.

The same flow the `ontogat train` / `ontogat match` / `ontogat eval`
commands run, shown as library calls.
"""

from pathlib import Path

from ontogat import GatConfig, SiameseModel, evaluate, match, read_ontology
from ontogat.alignio import cells_to_alignment, read_reference_json
from ontogat.embeddings import load_embeddings, merge_tables
from ontogat.neighborhood import build_all_neighborhoods
from ontogat.pipeline import build_feature_table
from ontogat.training import TrainConfig, build_dataset, select_threshold, train

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
reference = read_reference_json(str(FIXTURES / "toy" / "reference.json"))

cfg = TrainConfig(seed=0)  # defaults: lr 0.01, 5 epochs, wd 0.001, batch 16
train_set, validation = build_dataset(onto_a, onto_b, reference, cfg)
print(f"dataset: {len(train_set)} train pairs, {len(validation)} validation pairs")

model = SiameseModel.init(GatConfig(feature_dim=table.dim, hidden_dim=8, output_dim=32), seed=0)
trace = train(model, train_set, cfg, graphs, features)
print("epoch mean losses:", " ".join(f"{x:.4f}" for x in trace))

threshold = select_threshold(model, validation, graphs, features)
print(f"validation threshold: {threshold:.4f}")

alignment = match(onto_a, onto_b, model, threshold, features, graphs=graphs)
print(f"\nalignment ({len(alignment)} cells):")
for cell in alignment:
    print(f"  {onto_a.entity(cell.left).label:20s} = {onto_b.entity(cell.right).label:25s} "
          f"{cell.confidence:.3f}")

for variant in ("m1", "m2", "m3"):
    report = evaluate(alignment, cells_to_alignment(reference), variant, onto_a, onto_b)
    print(f"{variant}: P={report.precision:.3f} R={report.recall:.3f} F1={report.f1:.3f} "
          f"(tp={report.tp} fp={report.fp} fn={report.fn})")
