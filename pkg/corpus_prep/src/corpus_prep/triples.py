"""Shared triple representation for the RDF/XML and Turtle readers."""

from __future__ import annotations

from dataclasses import dataclass

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"

RDF_TYPE = RDF_NS + "type"
RDFS_SUBCLASS_OF = RDFS_NS + "subClassOf"
RDFS_LABEL = RDFS_NS + "label"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"
OWL_CLASS = OWL_NS + "Class"
OWL_OBJECT_PROPERTY = OWL_NS + "ObjectProperty"
OWL_DATATYPE_PROPERTY = OWL_NS + "DatatypeProperty"
OWL_EQUIVALENT_CLASS = OWL_NS + "equivalentClass"
OWL_RESTRICTION = OWL_NS + "Restriction"
OWL_ON_PROPERTY = OWL_NS + "onProperty"
OWL_ONTOLOGY = OWL_NS + "Ontology"

IRI = "iri"
LITERAL = "literal"


@dataclass(frozen=True)
class Triple:
    """Object kind is 'iri' (including '_:' blank labels) or 'literal'."""

    subject: str
    predicate: str
    obj: str
    obj_kind: str = IRI


def is_blank(term: str) -> bool:
    return term.startswith("_:")


def local_name(iri: str) -> str:
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    return iri.rstrip("/").rsplit("/", 1)[-1]


class ParseFailure(ValueError):
    """Raised with the offending location when an input file cannot be read."""
