"""In-memory ontology model: entities plus typed relation edges.

Ontologies arrive as interchange JSON documents (see README for the schema)
and are immutable after loading, so they can be shared freely across
threads and pipeline stages.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

CLASS = "class"
OBJECT_PROPERTY = "object_property"
DATATYPE_PROPERTY = "datatype_property"
ENTITY_KINDS = (CLASS, OBJECT_PROPERTY, DATATYPE_PROPERTY)
PROPERTY_KINDS = (OBJECT_PROPERTY, DATATYPE_PROPERTY)

SUBCLASS_OF = "subClassOf"
EQUIVALENT_CLASS = "equivalentClass"
DOMAIN = "domain"
RANGE = "range"
RESTRICTION = "restriction"
RELATIONS = (SUBCLASS_OF, EQUIVALENT_CLASS, DOMAIN, RANGE, RESTRICTION)

OUTGOING = "outgoing"
INCOMING = "incoming"


class OntologyError(ValueError):
    """Raised when an interchange document violates the ontology invariants."""


def local_name(iri: str) -> str:
    """Fragment after '#', else the segment after the last '/'."""
    if "#" in iri:
        return iri.rsplit("#", 1)[1]
    return iri.rstrip("/").rsplit("/", 1)[-1]


@dataclass(frozen=True)
class Entity:
    iri: str
    kind: str
    label: str


@dataclass(frozen=True)
class RelationEdge:
    src: str
    rel: str
    dst: str


class Ontology:
    """Immutable entity/edge store with indexed neighbor queries."""

    def __init__(self, iri: str, entities: list[Entity], edges: list[RelationEdge]):
        self.iri = iri
        self._entities: dict[str, Entity] = {}
        for ent in entities:
            if not ent.iri:
                raise OntologyError("entity with empty IRI")
            if ent.iri in self._entities:
                raise OntologyError(f"duplicate entity id: {ent.iri}")
            if ent.kind not in ENTITY_KINDS:
                raise OntologyError(f"unknown entity kind {ent.kind!r} for {ent.iri}")
            self._entities[ent.iri] = ent
        self.edges: tuple[RelationEdge, ...] = tuple(edges)
        self._check_edges()
        # (rel, direction) -> endpoint -> IRI-ascending neighbor list
        self._index: dict[tuple[str, str], dict[str, list[str]]] = {}
        for rel in RELATIONS:
            self._index[(rel, OUTGOING)] = {}
            self._index[(rel, INCOMING)] = {}
        for edge in self.edges:
            self._index[(edge.rel, OUTGOING)].setdefault(edge.src, []).append(edge.dst)
            self._index[(edge.rel, INCOMING)].setdefault(edge.dst, []).append(edge.src)
        for buckets in self._index.values():
            for neighbors in buckets.values():
                neighbors.sort()

    def _check_edges(self) -> None:
        for edge in self.edges:
            if edge.rel not in RELATIONS:
                raise OntologyError(f"unknown relation {edge.rel!r}")
            for endpoint in (edge.src, edge.dst):
                if endpoint not in self._entities:
                    raise OntologyError(f"dangling endpoint: {endpoint}")
            src_kind = self._entities[edge.src].kind
            dst_kind = self._entities[edge.dst].kind
            if edge.rel in (DOMAIN, RANGE):
                if src_kind not in PROPERTY_KINDS or dst_kind != CLASS:
                    raise OntologyError(
                        f"{edge.rel} edge must link property to class: {edge.src} -> {edge.dst}"
                    )
            elif edge.rel == RESTRICTION:
                if src_kind != CLASS or dst_kind != OBJECT_PROPERTY:
                    raise OntologyError(
                        f"restriction edge must link class to object property: "
                        f"{edge.src} -> {edge.dst}"
                    )

    def __contains__(self, iri: str) -> bool:
        return iri in self._entities

    def __len__(self) -> int:
        return len(self._entities)

    def entity(self, iri: str) -> Entity:
        try:
            return self._entities[iri]
        except KeyError:
            raise OntologyError(f"unknown entity: {iri}") from None

    def entities(self) -> list[Entity]:
        return list(self._entities.values())

    def iris(self, kind: str | None = None) -> list[str]:
        """Entity IRIs, optionally restricted to one kind, IRI-ascending."""
        if kind is None:
            return sorted(self._entities)
        return sorted(iri for iri, e in self._entities.items() if e.kind == kind)

    def classes(self) -> list[str]:
        return self.iris(CLASS)

    def properties(self) -> list[str]:
        return sorted(
            iri for iri, e in self._entities.items() if e.kind in PROPERTY_KINDS
        )

    def neighbors(self, centre: str, rel: str, direction: str) -> list[str]:
        """Endpoints of `rel` edges at `centre`, ascending by IRI.

        `direction` 'outgoing' returns dst of edges with src == centre,
        'incoming' returns src of edges with dst == centre.
        """
        if centre not in self._entities:
            raise OntologyError(f"unknown entity: {centre}")
        if rel not in RELATIONS:
            raise OntologyError(f"unknown relation {rel!r}")
        if direction not in (OUTGOING, INCOMING):
            raise OntologyError(f"unknown direction {direction!r}")
        return list(self._index[(rel, direction)].get(centre, []))


def load_ontology(document: dict) -> Ontology:
    """Build an Ontology from a parsed interchange JSON document."""
    if not isinstance(document, dict):
        raise OntologyError("interchange document must be a JSON object")
    entities = []
    for item in document.get("entities", []):
        iri = item["id"]
        label = item.get("label", "") or local_name(iri)
        entities.append(Entity(iri=iri, kind=item["kind"], label=label))
    edges = [
        RelationEdge(src=item["src"], rel=item["rel"], dst=item["dst"])
        for item in document.get("edges", [])
    ]
    return Ontology(document.get("ontology_iri", ""), entities, edges)


def read_ontology(path: str) -> Ontology:
    with open(path, encoding="utf-8") as fh:
        return load_ontology(json.load(fh))


def dump_ontology(onto: Ontology) -> dict:
    """Serialize back to the interchange JSON structure (edge order preserved)."""
    return {
        "ontology_iri": onto.iri,
        "entities": [
            {"id": e.iri, "kind": e.kind, "label": e.label} for e in onto.entities()
        ],
        "edges": [{"src": e.src, "rel": e.rel, "dst": e.dst} for e in onto.edges],
    }
