"""Per-class heterogeneous neighborhood: five homogeneous subgraphs.

Each class gets one subgraph per relation kind (parents, children,
equivalents, domain-of-properties, range-of-properties). Object properties
restricted in the definition of a parent/child/equivalent class are injected
into that subgraph as extra members. Member lists are deduplicated,
IRI-sorted and truncated to n_max, so the construction is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ontology import (
    CLASS,
    DOMAIN,
    EQUIVALENT_CLASS,
    INCOMING,
    OUTGOING,
    RANGE,
    RESTRICTION,
    SUBCLASS_OF,
    Ontology,
    OntologyError,
)

PARENTS = "parents"
CHILDREN = "children"
EQUIVALENTS = "equivalents"
DOMAIN_OF = "domain_of_properties"
RANGE_OF = "range_of_properties"

# Fixed order: attention head k is bound to kind k and outputs concatenate in
# this order.
SUBGRAPH_KINDS = (PARENTS, CHILDREN, EQUIVALENTS, DOMAIN_OF, RANGE_OF)

DEFAULT_N_MAX = 8


@dataclass(frozen=True)
class HomogeneousSubgraph:
    kind: str
    centre: str
    members: tuple[str, ...]


@dataclass(frozen=True)
class NeighborhoodGraph:
    centre: str
    subgraphs: tuple[HomogeneousSubgraph, ...]

    def subgraph(self, kind: str) -> HomogeneousSubgraph:
        return self.subgraphs[SUBGRAPH_KINDS.index(kind)]

    def member_iris(self) -> list[str]:
        """All member IRIs across subgraphs, deduplicated, order preserved."""
        seen: dict[str, None] = {}
        for sub in self.subgraphs:
            for iri in sub.members:
                seen.setdefault(iri)
        return list(seen)


def _with_restrictions(onto: Ontology, members: list[str]) -> list[str]:
    out = list(members)
    for member in members:
        if member in onto and onto.entity(member).kind == CLASS:
            out.extend(onto.neighbors(member, RESTRICTION, OUTGOING))
    return out


def build_neighborhood(
    onto: Ontology, centre: str, n_max: int = DEFAULT_N_MAX
) -> NeighborhoodGraph:
    """Five homogeneous subgraphs around one centre class."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if onto.entity(centre).kind != CLASS:
        raise OntologyError(f"neighborhood centre must be a class: {centre}")

    raw: dict[str, list[str]] = {
        PARENTS: _with_restrictions(onto, onto.neighbors(centre, SUBCLASS_OF, OUTGOING)),
        CHILDREN: _with_restrictions(onto, onto.neighbors(centre, SUBCLASS_OF, INCOMING)),
        EQUIVALENTS: _with_restrictions(
            onto,
            onto.neighbors(centre, EQUIVALENT_CLASS, OUTGOING)
            + onto.neighbors(centre, EQUIVALENT_CLASS, INCOMING),
        ),
        DOMAIN_OF: onto.neighbors(centre, DOMAIN, INCOMING),
        RANGE_OF: onto.neighbors(centre, RANGE, INCOMING),
    }

    subgraphs = []
    for kind in SUBGRAPH_KINDS:
        members = sorted(set(raw[kind]) - {centre})[:n_max]
        subgraphs.append(
            HomogeneousSubgraph(kind=kind, centre=centre, members=tuple(members))
        )
    return NeighborhoodGraph(centre=centre, subgraphs=tuple(subgraphs))


def build_all_neighborhoods(
    onto: Ontology, n_max: int = DEFAULT_N_MAX
) -> dict[str, NeighborhoodGraph]:
    """Neighborhood graphs for every class in the ontology."""
    return {iri: build_neighborhood(onto, iri, n_max) for iri in onto.classes()}
