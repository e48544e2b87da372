"""Corpus preparation for the ontology alignment core: OWL/RDF to
interchange JSON, reference alignments to reference JSON, term embeddings
to the embedding file format."""

from .convert import convert_ontology, triples_to_document
from .embed import export_embeddings, hash_sentence_vector, read_terms
from .rdfxml import parse_rdfxml
from .reference import convert_reference
from .triples import ParseFailure, Triple
from .turtle import parse_turtle

__version__ = "0.1.0"

__all__ = [
    "ParseFailure",
    "Triple",
    "convert_ontology",
    "convert_reference",
    "export_embeddings",
    "hash_sentence_vector",
    "parse_rdfxml",
    "parse_turtle",
    "read_terms",
    "triples_to_document",
]
