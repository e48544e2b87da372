#!/usr/bin/env python3
"""Load an interchange ontology and walk per-class neighborhood subgraphs.

Each class gets five homogeneous subgraphs (parents, children, equivalents,
domain-of-properties, range-of-properties); object properties restricted in
a parent/child class definition are injected as extra members.
"""

from pathlib import Path

from ontogat import build_neighborhood, read_ontology

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

onto = read_ontology(str(FIXTURES / "conference" / "cmt.json"))
print(f"{onto.iri}: {len(onto.classes())} classes, {len(onto.properties())} properties, "
      f"{len(onto.edges)} edges")

for centre in ["http://cmt#Reviewer", "http://cmt#Paper", "http://cmt#Conference"]:
    entity = onto.entity(centre)
    print(f"\ncentre class {entity.label}")
    graph = build_neighborhood(onto, centre, n_max=8)
    for sub in graph.subgraphs:
        members = ", ".join(onto.entity(m).label for m in sub.members) or "(empty)"
        print(f"  {sub.kind:22s} {members}")

print("\ndirect neighbor query: incoming subClassOf at Person")
for iri in onto.neighbors("http://cmt#Person", "subClassOf", "incoming"):
    print(" ", onto.entity(iri).label)
