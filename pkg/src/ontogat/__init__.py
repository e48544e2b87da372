"""Ontology alignment with multi-head graph attention over neighborhood subgraphs."""

from .embeddings import (
    EmbeddingTable,
    entity_vector,
    feature_vector,
    hash_vector,
    load_embeddings,
    merge_tables,
    write_embeddings,
)
from .gat import (
    AttentionHead,
    GatConfig,
    SiameseModel,
    attention_coefficients,
    cosine_similarity,
    head_output,
)
from .gradcheck import run_gradcheck
from .matching import (
    AlignmentCell,
    AlignmentSet,
    extract_alignment,
    match,
    match_label_baseline,
    score_class_pair,
    score_property_pair,
)
from .metrics import EvalReport, aggregate, evaluate, filter_variant
from .neighborhood import (
    SUBGRAPH_KINDS,
    HomogeneousSubgraph,
    NeighborhoodGraph,
    build_all_neighborhoods,
    build_neighborhood,
)
from .ontology import Entity, Ontology, RelationEdge, load_ontology, read_ontology
from .pipeline import RunConfig, build_feature_table, load_pair
from .preprocessing import bag_of_words, expand_abbreviations, remove_stopwords, tokenize
from .training import (
    LabeledPair,
    TrainConfig,
    build_dataset,
    select_threshold,
    threshold_from_scores,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "AlignmentCell",
    "AlignmentSet",
    "AttentionHead",
    "EmbeddingTable",
    "Entity",
    "EvalReport",
    "GatConfig",
    "HomogeneousSubgraph",
    "LabeledPair",
    "NeighborhoodGraph",
    "Ontology",
    "RelationEdge",
    "RunConfig",
    "SUBGRAPH_KINDS",
    "SiameseModel",
    "TrainConfig",
    "aggregate",
    "attention_coefficients",
    "bag_of_words",
    "build_all_neighborhoods",
    "build_dataset",
    "build_feature_table",
    "build_neighborhood",
    "cosine_similarity",
    "entity_vector",
    "evaluate",
    "expand_abbreviations",
    "extract_alignment",
    "feature_vector",
    "filter_variant",
    "hash_vector",
    "head_output",
    "load_embeddings",
    "load_ontology",
    "load_pair",
    "match",
    "match_label_baseline",
    "merge_tables",
    "read_ontology",
    "remove_stopwords",
    "run_gradcheck",
    "score_class_pair",
    "score_property_pair",
    "select_threshold",
    "threshold_from_scores",
    "tokenize",
    "train",
    "write_embeddings",
]
