"""Shared test utilities: naive oracles and random fixture generators."""

import numpy as np

from ontogat.neighborhood import SUBGRAPH_KINDS
from ontogat.ontology import load_ontology

PARENTS, CHILDREN, EQUIVALENTS, DOMAIN_OF, RANGE_OF = SUBGRAPH_KINDS


def oracle_neighborhood(document, centre, n_max):
    """Naive edge-list scan restating the neighborhood construction."""
    edges = document["edges"]
    kinds = {e["id"]: e["kind"] for e in document["entities"]}

    parents = [e["dst"] for e in edges if e["rel"] == "subClassOf" and e["src"] == centre]
    children = [e["src"] for e in edges if e["rel"] == "subClassOf" and e["dst"] == centre]
    equivalents = [
        e["dst"] for e in edges if e["rel"] == "equivalentClass" and e["src"] == centre
    ] + [e["src"] for e in edges if e["rel"] == "equivalentClass" and e["dst"] == centre]
    domain_of = [e["src"] for e in edges if e["rel"] == "domain" and e["dst"] == centre]
    range_of = [e["src"] for e in edges if e["rel"] == "range" and e["dst"] == centre]

    def inject_restrictions(members):
        out = list(members)
        for m in members:
            if kinds.get(m) == "class":
                out.extend(e["dst"] for e in edges if e["rel"] == "restriction" and e["src"] == m)
        return out

    raw = {
        PARENTS: inject_restrictions(parents),
        CHILDREN: inject_restrictions(children),
        EQUIVALENTS: inject_restrictions(equivalents),
        DOMAIN_OF: domain_of,
        RANGE_OF: range_of,
    }
    return {
        kind: tuple(sorted(set(members) - {centre})[:n_max]) for kind, members in raw.items()
    }


def random_ontology_document(seed, max_entities=20):
    """Random valid interchange document with <= max_entities entities."""
    rng = np.random.default_rng(seed)
    n_classes = int(rng.integers(1, max(2, max_entities - 4)))
    n_obj = int(rng.integers(0, max(1, (max_entities - n_classes) // 2) + 1))
    n_dat = int(rng.integers(0, max_entities - n_classes - n_obj + 1))

    classes = [f"http://t{seed}/C{i}" for i in range(n_classes)]
    obj_props = [f"http://t{seed}/op{i}" for i in range(n_obj)]
    dat_props = [f"http://t{seed}/dp{i}" for i in range(n_dat)]
    entities = (
        [{"id": c, "kind": "class", "label": c.rsplit("/", 1)[1]} for c in classes]
        + [{"id": p, "kind": "object_property", "label": p.rsplit("/", 1)[1]} for p in obj_props]
        + [{"id": p, "kind": "datatype_property", "label": p.rsplit("/", 1)[1]} for p in dat_props]
    )

    edges = []
    seen = set()

    def add(src, rel, dst):
        if (src, rel, dst) not in seen and src != dst:
            seen.add((src, rel, dst))
            edges.append({"src": src, "rel": rel, "dst": dst})

    def pick(pool):
        return pool[int(rng.integers(0, len(pool)))]

    for _ in range(int(rng.integers(0, 3 * max(1, n_classes)))):
        rel = pick(["subClassOf", "equivalentClass", "domain", "range", "restriction"])
        if rel in ("subClassOf", "equivalentClass") and n_classes >= 2:
            add(pick(classes), rel, pick(classes))
        elif rel in ("domain", "range") and (obj_props or dat_props) and classes:
            add(pick(obj_props + dat_props), rel, pick(classes))
        elif rel == "restriction" and obj_props and classes:
            add(pick(classes), rel, pick(obj_props))
    return {"ontology_iri": f"http://t{seed}", "entities": entities, "edges": edges}


def random_ontology(seed, max_entities=20):
    return load_ontology(random_ontology_document(seed, max_entities))


def oracle_greedy_extraction(scores, threshold):
    """Brute-force restatement of greedy one-to-one extraction: repeatedly
    take the best remaining admissible pair (ties by ascending IRI pair).
    """
    remaining = dict(scores)
    used_left, used_right = set(), set()
    cells = []
    while True:
        candidates = [
            (left, right, sc)
            for (left, right), sc in remaining.items()
            if sc >= threshold and left not in used_left and right not in used_right
        ]
        if not candidates:
            return cells
        left, right, sc = min(candidates, key=lambda c: (-c[2], c[0], c[1]))
        cells.append((left, right, sc))
        used_left.add(left)
        used_right.add(right)
        del remaining[(left, right)]
