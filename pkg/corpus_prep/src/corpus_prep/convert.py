"""Triples to interchange JSON: classes, properties, labels, and the five
edge kinds (subClassOf, equivalentClass, domain, range, restriction).

A restriction edge links a class to the object property named by an
owl:Restriction blank node inside the class definition (reached through
rdfs:subClassOf or owl:equivalentClass). Anything else OWL can express is
dropped; edges whose endpoints are not declared entities are skipped with a
warning so the output always satisfies referential integrity.
"""

from __future__ import annotations

import logging
import os

from .rdfxml import parse_rdfxml
from .triples import (
    IRI,
    LITERAL,
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_EQUIVALENT_CLASS,
    OWL_OBJECT_PROPERTY,
    OWL_ON_PROPERTY,
    OWL_ONTOLOGY,
    OWL_RESTRICTION,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LABEL,
    RDFS_RANGE,
    RDFS_SUBCLASS_OF,
    Triple,
    is_blank,
    local_name,
)
from .turtle import parse_turtle

logger = logging.getLogger(__name__)

_KIND_BY_TYPE = {
    OWL_CLASS: "class",
    OWL_OBJECT_PROPERTY: "object_property",
    OWL_DATATYPE_PROPERTY: "datatype_property",
}

_FORMAT_BY_EXTENSION = {
    ".owl": "rdf-xml",
    ".rdf": "rdf-xml",
    ".xml": "rdf-xml",
    ".ttl": "turtle",
}


def detect_format(path: str) -> str:
    extension = os.path.splitext(path)[1].lower()
    try:
        return _FORMAT_BY_EXTENSION[extension]
    except KeyError:
        raise ValueError(
            f"cannot infer RDF format from {path!r} (expected .owl/.rdf/.xml or .ttl)"
        ) from None


def parse_ontology_file(path: str, format: str | None = None) -> list[Triple]:
    format = format or detect_format(path)
    if format == "rdf-xml":
        return parse_rdfxml(path)
    if format == "turtle":
        return parse_turtle(path)
    raise ValueError(f"unknown RDF format {format!r}")


def triples_to_document(triples: list[Triple]) -> dict:
    """Interchange document from a triple list, in document order."""
    kinds: dict[str, str] = {}
    labels: dict[str, str] = {}
    ontology_iri = ""
    restriction_blanks: set[str] = set()
    on_property: dict[str, str] = {}

    for t in triples:
        if t.predicate == RDF_TYPE and t.obj_kind == IRI:
            if t.obj == OWL_ONTOLOGY and not is_blank(t.subject) and not ontology_iri:
                ontology_iri = t.subject
            elif t.obj == OWL_RESTRICTION:
                restriction_blanks.add(t.subject)
            elif t.obj in _KIND_BY_TYPE:
                if is_blank(t.subject):
                    logger.warning("entity without IRI skipped (blank %s)", t.obj)
                    continue
                kinds.setdefault(t.subject, _KIND_BY_TYPE[t.obj])
        elif t.predicate == OWL_ON_PROPERTY and t.obj_kind == IRI:
            on_property[t.subject] = t.obj
        elif t.predicate == RDFS_LABEL and t.obj_kind == LITERAL and t.obj:
            labels.setdefault(t.subject, t.obj)

    entities = [
        {"id": iri, "kind": kind, "label": labels.get(iri) or local_name(iri)}
        for iri, kind in kinds.items()
    ]

    def restricted_property(blank: str) -> str | None:
        if blank not in restriction_blanks:
            return None
        prop = on_property.get(blank)
        if prop is None or kinds.get(prop) != "object_property":
            logger.warning("restriction %s does not name a declared object property", blank)
            return None
        return prop

    edges = []
    seen = set()

    def add_edge(src: str, rel: str, dst: str) -> None:
        if src not in kinds or dst not in kinds:
            logger.warning("%s edge with undeclared endpoint skipped: %s -> %s", rel, src, dst)
            return
        key = (src, rel, dst)
        if key not in seen:
            seen.add(key)
            edges.append({"src": src, "rel": rel, "dst": dst})

    for t in triples:
        if t.obj_kind != IRI or is_blank(t.subject):
            continue
        if t.predicate in (RDFS_SUBCLASS_OF, OWL_EQUIVALENT_CLASS):
            rel = "subClassOf" if t.predicate == RDFS_SUBCLASS_OF else "equivalentClass"
            if is_blank(t.obj):
                prop = restricted_property(t.obj)
                if prop is not None:
                    add_edge(t.subject, "restriction", prop)
            else:
                add_edge(t.subject, rel, t.obj)
        elif t.predicate == RDFS_DOMAIN and not is_blank(t.obj):
            add_edge(t.subject, "domain", t.obj)
        elif t.predicate == RDFS_RANGE and not is_blank(t.obj):
            if t.obj in kinds:
                add_edge(t.subject, "range", t.obj)
            # ranges naming datatypes (xsd:string etc.) are intentionally dropped

    return {"ontology_iri": ontology_iri, "entities": entities, "edges": edges}


def convert_ontology(path: str, format: str | None = None) -> dict:
    return triples_to_document(parse_ontology_file(path, format))
