"""Candidate scoring and alignment extraction across two ontologies.

Classes are scored through the attention model (rescaled cosine of the two
encodings); properties are scored by the rescaled cosine of their label
embeddings alone. Extraction is greedy one-to-one: descending score, ties by
ascending IRI pair, a cell is kept iff its score clears the threshold and
neither endpoint is taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embeddings import EmbeddingTable
from .gat import SiameseModel, cosine_similarity
from .neighborhood import NeighborhoodGraph, build_all_neighborhoods
from .ontology import DATATYPE_PROPERTY, OBJECT_PROPERTY, Ontology

EQUIVALENCE = "="


class MatchError(ValueError):
    pass


@dataclass(frozen=True)
class AlignmentCell:
    left: str
    right: str
    relation: str = EQUIVALENCE
    confidence: float = 1.0


@dataclass
class AlignmentSet:
    """Scored correspondence cells; duplicates and out-of-range confidences
    are rejected. One-to-one-ness is guaranteed by extraction, not here
    (alignments loaded from other systems may be m:n).
    """

    cells: list[AlignmentCell] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for cell in self.cells:
            if not 0.0 <= cell.confidence <= 1.0:
                raise MatchError(
                    f"confidence {cell.confidence} outside [0, 1] for {cell.left} / {cell.right}"
                )
            key = (cell.left, cell.right)
            if key in seen:
                raise MatchError(f"duplicate cell {key}")
            seen.add(key)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def pairs(self) -> set[tuple[str, str]]:
        return {(c.left, c.right) for c in self.cells}


def rescale_cosine(value: float) -> float:
    """[-1, 1] -> [0, 1], clipped against float round-off."""
    return min(1.0, max(0.0, (value + 1.0) / 2.0))


def score_class_pair(
    model: SiameseModel,
    a: str,
    b: str,
    graphs: dict[str, NeighborhoodGraph],
    features: EmbeddingTable,
) -> float:
    for iri in (a, b):
        if iri not in graphs:
            raise MatchError(f"no neighborhood graph for {iri} (not a class?)")
    return rescale_cosine(model.score(graphs[a], graphs[b], features))


def score_property_pair(
    a: str,
    b: str,
    features: EmbeddingTable,
    kind_a: str | None = None,
    kind_b: str | None = None,
) -> float:
    if kind_a is not None and kind_b is not None and kind_a != kind_b:
        raise MatchError(f"property kind mismatch: {a} is {kind_a}, {b} is {kind_b}")
    return rescale_cosine(cosine_similarity(features.lookup(a), features.lookup(b)))


def extract_alignment(scores: dict[tuple[str, str], float], threshold: float) -> AlignmentSet:
    """Greedy one-to-one extraction over a score map."""
    cells = []
    used_left: set[str] = set()
    used_right: set[str] = set()
    ordered = sorted(scores.items(), key=lambda item: (-item[1], item[0][0], item[0][1]))
    for (left, right), score in ordered:
        if score < threshold:
            break
        if left in used_left or right in used_right:
            continue
        used_left.add(left)
        used_right.add(right)
        cells.append(AlignmentCell(left=left, right=right, confidence=score))
    cells.sort(key=lambda c: (c.left, c.right))
    return AlignmentSet(cells)


def _property_scores(
    onto_a: Ontology, onto_b: Ontology, features: EmbeddingTable
) -> dict[tuple[str, str], float]:
    scores: dict[tuple[str, str], float] = {}
    for kind in (OBJECT_PROPERTY, DATATYPE_PROPERTY):
        for a in onto_a.iris(kind):
            for b in onto_b.iris(kind):
                scores[(a, b)] = score_property_pair(a, b, features, kind, kind)
    return scores


def match(
    onto_a: Ontology,
    onto_b: Ontology,
    model: SiameseModel,
    threshold: float,
    features: EmbeddingTable,
    graphs: dict[str, NeighborhoodGraph] | None = None,
    n_max: int = 8,
) -> AlignmentSet:
    """Full cross-product matching within kind; class and property alignments
    are extracted one-to-one independently and unioned.
    """
    if graphs is None:
        graphs = {**build_all_neighborhoods(onto_a, n_max), **build_all_neighborhoods(onto_b, n_max)}
    class_scores = {
        (a, b): score_class_pair(model, a, b, graphs, features)
        for a in onto_a.classes()
        for b in onto_b.classes()
    }
    class_cells = extract_alignment(class_scores, threshold).cells
    property_cells = extract_alignment(_property_scores(onto_a, onto_b, features), threshold).cells
    cells = sorted(class_cells + property_cells, key=lambda c: (c.left, c.right))
    return AlignmentSet(cells)


def match_label_baseline(
    onto_a: Ontology,
    onto_b: Ontology,
    threshold: float,
    features: EmbeddingTable,
) -> AlignmentSet:
    """Label-embedding-cosine-only matcher: identical harness, no attention.

    Reference point for measuring what the neighborhood context adds.
    """
    class_scores = {
        (a, b): rescale_cosine(cosine_similarity(features.lookup(a), features.lookup(b)))
        for a in onto_a.classes()
        for b in onto_b.classes()
    }
    class_cells = extract_alignment(class_scores, threshold).cells
    property_cells = extract_alignment(_property_scores(onto_a, onto_b, features), threshold).cells
    cells = sorted(class_cells + property_cells, key=lambda c: (c.left, c.right))
    return AlignmentSet(cells)
