"""Conference-track evaluation: precision, recall, F-beta under M1/M2/M3.

M1 keeps class-class cells, M2 property-property, M3 everything. Counts are
exact IRI matches between system and reference pairs; aggregation across
test cases is micro-averaged (sum tp/fp/fn, recompute).
"""

from __future__ import annotations

from dataclasses import dataclass

from .matching import AlignmentCell, AlignmentSet
from .ontology import CLASS, PROPERTY_KINDS, Ontology

M1 = "m1"
M2 = "m2"
M3 = "m3"
VARIANTS = (M1, M2, M3)


def fbeta(precision: float, recall: float, beta: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    b2 = beta * beta
    return (1.0 + b2) * precision * recall / (b2 * precision + recall)


@dataclass(frozen=True)
class EvalReport:
    variant: str
    precision: float
    recall: float
    f05: float
    f1: float
    f2: float
    tp: int
    fp: int
    fn: int

    @classmethod
    def from_counts(cls, variant: str, tp: int, fp: int, fn: int) -> "EvalReport":
        precision = tp / (tp + fp) if tp + fp else 1.0
        recall = tp / (tp + fn) if tp + fn else 1.0
        return cls(
            variant=variant,
            precision=precision,
            recall=recall,
            f05=fbeta(precision, recall, 0.5),
            f1=fbeta(precision, recall, 1.0),
            f2=fbeta(precision, recall, 2.0),
            tp=tp,
            fp=fp,
            fn=fn,
        )


def _cell_kinds(cell: AlignmentCell, onto_a: Ontology, onto_b: Ontology) -> tuple[str, str]:
    for iri, onto in ((cell.left, onto_a), (cell.right, onto_b)):
        if iri not in onto:
            raise ValueError(f"cell endpoint not in ontologies: {iri}")
    return onto_a.entity(cell.left).kind, onto_b.entity(cell.right).kind


def filter_variant(
    cells: AlignmentSet, variant: str, onto_a: Ontology, onto_b: Ontology
) -> AlignmentSet:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant == M3:
        return AlignmentSet(list(cells))
    kept = []
    for cell in cells:
        kind_left, kind_right = _cell_kinds(cell, onto_a, onto_b)
        if variant == M1 and kind_left == CLASS and kind_right == CLASS:
            kept.append(cell)
        elif variant == M2 and kind_left in PROPERTY_KINDS and kind_right in PROPERTY_KINDS:
            kept.append(cell)
    return AlignmentSet(kept)


def evaluate(
    system: AlignmentSet,
    reference: AlignmentSet,
    variant: str,
    onto_a: Ontology,
    onto_b: Ontology,
) -> EvalReport:
    """Counts over variant-filtered cell sets, matched by exact IRI pair."""
    system_pairs = {
        (c.left.strip(), c.right.strip())
        for c in filter_variant(system, variant, onto_a, onto_b)
    }
    reference_pairs = {
        (c.left.strip(), c.right.strip())
        for c in filter_variant(reference, variant, onto_a, onto_b)
    }
    tp = len(system_pairs & reference_pairs)
    return EvalReport.from_counts(
        variant, tp=tp, fp=len(system_pairs) - tp, fn=len(reference_pairs) - tp
    )


def aggregate(reports: list[EvalReport]) -> EvalReport:
    """Micro-average: sum the counts, recompute the measures."""
    if not reports:
        raise ValueError("no reports to aggregate")
    variants = {r.variant for r in reports}
    if len(variants) > 1:
        raise ValueError(f"mixed variants in aggregation: {sorted(variants)}")
    return EvalReport.from_counts(
        reports[0].variant,
        tp=sum(r.tp for r in reports),
        fp=sum(r.fp for r in reports),
        fn=sum(r.fn for r in reports),
    )


def report_rows(named_reports: list[tuple[str, EvalReport]]) -> list[str]:
    """CSV lines (header, one row per case, ALL aggregate row)."""
    lines = ["case,variant,precision,f05,f1,f2,recall,tp,fp,fn"]
    for name, r in named_reports:
        lines.append(
            f"{name},{r.variant},{r.precision:.6f},{r.f05:.6f},{r.f1:.6f},"
            f"{r.f2:.6f},{r.recall:.6f},{r.tp},{r.fp},{r.fn}"
        )
    total = aggregate([r for _, r in named_reports])
    lines.append(
        f"ALL,{total.variant},{total.precision:.6f},{total.f05:.6f},{total.f1:.6f},"
        f"{total.f2:.6f},{total.recall:.6f},{total.tp},{total.fp},{total.fn}"
    )
    return lines
