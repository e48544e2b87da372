"""OAEI Alignment-format reference files to reference JSON cells.

The reader is namespace-lenient (matches element local names), keeps the
relation verbatim, coerces the measure to a float in [0, 1], and skips
cells with missing fields with a warning.
"""

from __future__ import annotations

import logging
import xml.etree.ElementTree as ET

from .triples import ParseFailure

logger = logging.getLogger(__name__)

_RDF_RESOURCE = "{http://www.w3.org/1999/02/22-rdf-syntax-ns#}resource"


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def convert_reference(path: str) -> list[dict]:
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        line, column = exc.position
        raise ParseFailure(f"{path}:{line}:{column}: {exc.msg}") from exc

    cells = []
    for element in root.iter():
        if _local(element.tag) != "Cell":
            continue
        entity1 = entity2 = relation = measure_text = None
        for child in element.iter():
            name = _local(child.tag)
            if name == "entity1":
                entity1 = child.get(_RDF_RESOURCE) or (child.text or "").strip()
            elif name == "entity2":
                entity2 = child.get(_RDF_RESOURCE) or (child.text or "").strip()
            elif name == "relation":
                relation = (child.text or "").strip()
            elif name == "measure":
                measure_text = (child.text or "").strip()
        if not entity1 or not entity2 or relation is None:
            logger.warning("%s: cell with missing fields skipped", path)
            continue
        try:
            measure = float(measure_text) if measure_text is not None else 1.0
        except ValueError:
            logger.warning("%s: cell with unparseable measure %r skipped", path, measure_text)
            continue
        clamped = min(1.0, max(0.0, measure))
        if clamped != measure:
            logger.warning("%s: measure %s clamped into [0, 1]", path, measure)
        cells.append(
            {"entity1": entity1, "entity2": entity2, "relation": relation, "measure": clamped}
        )
    return cells
