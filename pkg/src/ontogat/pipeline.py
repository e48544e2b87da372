"""Run configuration and end-to-end orchestration shared by CLI and demos.

A run config is a flat JSON object; relative paths resolve against the
config file's directory. Entity feature vectors are derived from the raw
embedding table once per run: under label-sentence granularity an entity
uses its own table row when present, otherwise (and always under
token-mean) the mean of its bag-of-words token vectors.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, fields

from .embeddings import (
    LABEL_SENTENCE,
    EmbeddingTable,
    feature_vector,
    load_embeddings,
    merge_tables,
)
from .gat import GatConfig, SiameseModel
from .neighborhood import DEFAULT_N_MAX, NeighborhoodGraph, build_all_neighborhoods
from .ontology import Ontology, read_ontology
from .preprocessing import bag_of_words, load_abbreviations, load_stopwords
from .training import TrainConfig

logger = logging.getLogger(__name__)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    ontology_a: str = ""
    ontology_b: str = ""
    embeddings_a: str = ""
    embeddings_b: str = ""
    reference: str = ""
    model: str = "model.ckpt"
    threshold_file: str = "threshold.txt"
    loss_csv: str = "loss.csv"
    alignment_tsv: str = "alignment.tsv"
    alignment_rdf: str = "alignment.rdf"
    seed: int = 0
    learning_rate: float = 0.01
    epochs: int = 5
    weight_decay: float = 0.001
    batch_size: int = 16
    negative_ratio: int = 5
    validation_fraction: float = 0.2
    embedding_granularity: str = LABEL_SENTENCE
    n_max: int = DEFAULT_N_MAX
    hidden_dim: int = 64
    output_dim: int = 256

    @classmethod
    def from_file(cls, path: str) -> "RunConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"config {path} must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        config = cls(**raw)
        base = os.path.dirname(os.path.abspath(path))
        for f in fields(cls):
            value = getattr(config, f.name)
            if f.name in _PATH_FIELDS and value:
                setattr(config, f.name, os.path.join(base, value))
        return config

    def train_config(self) -> TrainConfig:
        try:
            return TrainConfig(
                learning_rate=self.learning_rate,
                epochs=self.epochs,
                weight_decay=self.weight_decay,
                batch_size=self.batch_size,
                negative_ratio=self.negative_ratio,
                seed=self.seed,
                validation_fraction=self.validation_fraction,
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def gat_config(self, feature_dim: int) -> GatConfig:
        return GatConfig(
            feature_dim=feature_dim, hidden_dim=self.hidden_dim, output_dim=self.output_dim
        )

    def require_inputs(self, names: list[str]) -> None:
        for name in names:
            path = getattr(self, name)
            if not path:
                raise ConfigError(f"config key {name} is required")
            if not os.path.exists(path):
                raise ConfigError(f"{name.replace('_', ' ')} file not found: {path}")


_PATH_FIELDS = {
    "ontology_a",
    "ontology_b",
    "embeddings_a",
    "embeddings_b",
    "reference",
    "model",
    "threshold_file",
    "loss_csv",
    "alignment_tsv",
    "alignment_rdf",
}


def build_feature_table(
    ontologies: list[Ontology],
    table: EmbeddingTable,
    granularity: str = LABEL_SENTENCE,
) -> EmbeddingTable:
    """IRI-keyed feature vectors for every entity of the given ontologies."""
    abbrev = load_abbreviations()
    stopwords = load_stopwords()
    features = {}
    for onto in ontologies:
        for entity in onto.entities():
            bag = bag_of_words(entity.label, abbrev, stopwords)
            features[entity.iri] = feature_vector(table, entity.iri, bag, granularity)
    return EmbeddingTable(table.dim, features, oov_seed=table.oov_seed)


@dataclass
class LoadedPair:
    onto_a: Ontology
    onto_b: Ontology
    features: EmbeddingTable
    graphs: dict[str, NeighborhoodGraph]


def load_pair(config: RunConfig) -> LoadedPair:
    """Load both ontologies and derive features and neighborhood graphs."""
    onto_a = read_ontology(config.ontology_a)
    onto_b = read_ontology(config.ontology_b)
    table = merge_tables(
        [load_embeddings(config.embeddings_a), load_embeddings(config.embeddings_b)]
    )
    features = build_feature_table([onto_a, onto_b], table, config.embedding_granularity)
    graphs = {
        **build_all_neighborhoods(onto_a, config.n_max),
        **build_all_neighborhoods(onto_b, config.n_max),
    }
    return LoadedPair(onto_a=onto_a, onto_b=onto_b, features=features, graphs=graphs)


def write_threshold(path: str, threshold: float) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{threshold!r}\n")


def read_threshold(path: str) -> float:
    with open(path, encoding="utf-8") as fh:
        return float(fh.readline().strip())


def check_dimensions(model: SiameseModel, features: EmbeddingTable) -> None:
    if model.config.feature_dim != features.dim:
        raise ConfigError(
            f"checkpoint feature dimension {model.config.feature_dim} does not match "
            f"embedding dimension {features.dim}"
        )
