import json
from pathlib import Path

import pytest

from ontogat.alignio import read_reference_json
from ontogat.embeddings import load_embeddings, merge_tables
from ontogat.neighborhood import build_all_neighborhoods
from ontogat.ontology import read_ontology
from ontogat.pipeline import build_feature_table

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

TOY_CONFIG = {
    "ontology_a": "toy/confA.json",
    "ontology_b": "toy/confB.json",
    "embeddings_a": "toy/confA.emb",
    "embeddings_b": "toy/confB.emb",
    "reference": "toy/reference.json",
    "seed": 0,
    "embedding_granularity": "token-mean",
    "hidden_dim": 8,
    "output_dim": 32,
}

CONFERENCE_NAMES = ["cmt", "conference", "confOf", "edas", "ekaw", "iasted", "sigkdd"]


class ToyData:
    def __init__(self):
        self.onto_a = read_ontology(str(FIXTURES / "toy/confA.json"))
        self.onto_b = read_ontology(str(FIXTURES / "toy/confB.json"))
        self.table = merge_tables(
            [
                load_embeddings(str(FIXTURES / "toy/confA.emb")),
                load_embeddings(str(FIXTURES / "toy/confB.emb")),
            ]
        )
        self.features = build_feature_table([self.onto_a, self.onto_b], self.table, "token-mean")
        self.graphs = {
            **build_all_neighborhoods(self.onto_a),
            **build_all_neighborhoods(self.onto_b),
        }
        self.reference = read_reference_json(str(FIXTURES / "toy/reference.json"))


@pytest.fixture(scope="session")
def toy():
    return ToyData()


def write_toy_run_config(directory: Path, **overrides) -> str:
    """Materialize a CLI config for the toy fixture inside a tmp directory."""
    config = dict(TOY_CONFIG)
    for key in ("ontology_a", "ontology_b", "embeddings_a", "embeddings_b", "reference"):
        config[key] = str(FIXTURES / config[key])
    config.update(
        {
            "model": str(directory / "model.ckpt"),
            "threshold_file": str(directory / "threshold.txt"),
            "loss_csv": str(directory / "loss.csv"),
            "alignment_tsv": str(directory / "alignment.tsv"),
            "alignment_rdf": str(directory / "alignment.rdf"),
        }
    )
    config.update(overrides)
    path = directory / "config.json"
    path.write_text(json.dumps(config, indent=1))
    return str(path)
