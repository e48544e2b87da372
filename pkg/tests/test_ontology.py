import pytest

from ontogat.ontology import (
    CLASS,
    DOMAIN,
    EQUIVALENT_CLASS,
    INCOMING,
    OBJECT_PROPERTY,
    OUTGOING,
    SUBCLASS_OF,
    Entity,
    Ontology,
    OntologyError,
    RelationEdge,
    dump_ontology,
    load_ontology,
    local_name,
)


def doc(entities, edges, iri="http://example.org/onto"):
    return {"ontology_iri": iri, "entities": entities, "edges": edges}


def cls(iri, label=None):
    return {"id": iri, "kind": "class", "label": label or local_name(iri)}


class TestLoad:
    def test_basic_document(self):
        onto = load_ontology(
            doc(
                [cls("http://x/A"), cls("http://x/B")],
                [{"src": "http://x/B", "rel": "subClassOf", "dst": "http://x/A"}],
            )
        )
        assert len(onto) == 2
        assert onto.edges == (RelationEdge("http://x/B", "subClassOf", "http://x/A"),)

    def test_empty_document(self):
        onto = load_ontology(doc([], []))
        assert len(onto) == 0
        assert onto.edges == ()

    def test_dangling_endpoint(self):
        with pytest.raises(OntologyError, match="dangling endpoint"):
            load_ontology(
                doc([cls("http://x/A")], [{"src": "http://x/A", "rel": "subClassOf", "dst": "http://x/Z"}])
            )

    def test_duplicate_id(self):
        with pytest.raises(OntologyError, match="duplicate"):
            load_ontology(doc([cls("http://x/A"), cls("http://x/A")], []))

    def test_unknown_kind(self):
        with pytest.raises(OntologyError, match="unknown entity kind"):
            load_ontology(doc([{"id": "http://x/A", "kind": "thing", "label": "A"}], []))

    def test_unknown_rel(self):
        with pytest.raises(OntologyError, match="unknown relation"):
            load_ontology(
                doc(
                    [cls("http://x/A"), cls("http://x/B")],
                    [{"src": "http://x/A", "rel": "partOf", "dst": "http://x/B"}],
                )
            )

    def test_label_falls_back_to_local_name(self):
        onto = load_ontology(doc([{"id": "http://x/ns#PaperDraft", "kind": "class", "label": ""}], []))
        assert onto.entity("http://x/ns#PaperDraft").label == "PaperDraft"

    def test_domain_edge_shape_enforced(self):
        with pytest.raises(OntologyError, match="domain"):
            load_ontology(
                doc(
                    [cls("http://x/A"), cls("http://x/B")],
                    [{"src": "http://x/A", "rel": "domain", "dst": "http://x/B"}],
                )
            )

    def test_restriction_edge_shape_enforced(self):
        with pytest.raises(OntologyError, match="restriction"):
            load_ontology(
                doc(
                    [cls("http://x/A"), {"id": "http://x/p", "kind": "datatype_property", "label": "p"}],
                    [{"src": "http://x/A", "rel": "restriction", "dst": "http://x/p"}],
                )
            )

    def test_round_trip(self):
        document = doc(
            [
                cls("http://x/A"),
                cls("http://x/B"),
                {"id": "http://x/p", "kind": "object_property", "label": "p"},
            ],
            [
                {"src": "http://x/B", "rel": "subClassOf", "dst": "http://x/A"},
                {"src": "http://x/p", "rel": "domain", "dst": "http://x/B"},
            ],
        )
        assert dump_ontology(load_ontology(document)) == document


class TestNeighbors:
    @pytest.fixture
    def onto(self):
        entities = [
            Entity("http://x/A", CLASS, "A"),
            Entity("http://x/B", CLASS, "B"),
            Entity("http://x/C", CLASS, "C"),
            Entity("http://x/p", OBJECT_PROPERTY, "p"),
        ]
        edges = [
            RelationEdge("http://x/C", SUBCLASS_OF, "http://x/A"),
            RelationEdge("http://x/B", SUBCLASS_OF, "http://x/A"),
            RelationEdge("http://x/B", EQUIVALENT_CLASS, "http://x/C"),
            RelationEdge("http://x/p", DOMAIN, "http://x/B"),
        ]
        return Ontology("http://x", entities, edges)

    def test_single_incoming_edge(self, onto):
        assert onto.neighbors("http://x/B", DOMAIN, INCOMING) == ["http://x/p"]

    def test_isolated_entity(self, onto):
        assert onto.neighbors("http://x/p", SUBCLASS_OF, OUTGOING) == []

    def test_iri_ascending_order(self, onto):
        assert onto.neighbors("http://x/A", SUBCLASS_OF, INCOMING) == ["http://x/B", "http://x/C"]

    def test_unknown_centre(self, onto):
        with pytest.raises(OntologyError, match="unknown entity"):
            onto.neighbors("http://x/Z", SUBCLASS_OF, OUTGOING)

    def test_pure_function(self, onto):
        first = onto.neighbors("http://x/A", SUBCLASS_OF, INCOMING)
        second = onto.neighbors("http://x/A", SUBCLASS_OF, INCOMING)
        assert first == second
        first.append("mutating the returned list must not leak")
        assert onto.neighbors("http://x/A", SUBCLASS_OF, INCOMING) == second

    def test_each_edge_in_exactly_one_query_per_endpoint(self, onto):
        for edge in onto.edges:
            out = onto.neighbors(edge.src, edge.rel, OUTGOING)
            inc = onto.neighbors(edge.dst, edge.rel, INCOMING)
            assert edge.dst in out
            assert edge.src in inc

    def test_kind_filters(self, onto):
        assert onto.classes() == ["http://x/A", "http://x/B", "http://x/C"]
        assert onto.properties() == ["http://x/p"]
