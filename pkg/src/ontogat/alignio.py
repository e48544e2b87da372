"""Alignment serialization: TSV, OAEI Alignment-format RDF/XML, reference JSON.

Writers emit byte-reproducible output (fixed field order, fixed float
formatting, LF endings). The RDF/XML reader is namespace-lenient: it matches
element local names so that alignment files produced by other systems parse
too.
"""

from __future__ import annotations

import json
import logging
import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .matching import AlignmentCell, AlignmentSet

logger = logging.getLogger(__name__)

_ALIGNMENT_NS = "http://knowledgeweb.semanticweb.org/heterogeneity/alignment"
_RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
_RDF_RESOURCE = f"{{{_RDF_NS}}}resource"


def write_tsv(path: str, alignment: AlignmentSet) -> None:
    """left<TAB>right<TAB>relation<TAB>confidence, confidence to 6 decimals."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for cell in alignment:
            fh.write(f"{cell.left}\t{cell.right}\t{cell.relation}\t{cell.confidence:.6f}\n")


def read_tsv(path: str) -> AlignmentSet:
    cells = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 tab-separated fields")
            left, right, relation, confidence = fields
            cells.append(
                AlignmentCell(left=left, right=right, relation=relation, confidence=float(confidence))
            )
    return AlignmentSet(cells)


def write_rdf(path: str, alignment: AlignmentSet, onto1: str = "", onto2: str = "") -> None:
    """OAEI Alignment-format RDF/XML, one Cell per correspondence."""
    lines = [
        '<?xml version="1.0" encoding="utf-8"?>',
        f'<rdf:RDF xmlns="{_ALIGNMENT_NS}"',
        f'         xmlns:rdf="{_RDF_NS}"',
        '         xmlns:xsd="http://www.w3.org/2001/XMLSchema#">',
        "<Alignment>",
        "<xml>yes</xml>",
        "<level>0</level>",
        "<type>11</type>",
    ]
    if onto1:
        lines.append(f"<onto1>{escape(onto1)}</onto1>")
    if onto2:
        lines.append(f"<onto2>{escape(onto2)}</onto2>")
    for cell in alignment:
        lines.extend(
            [
                "<map>",
                "<Cell>",
                f"  <entity1 rdf:resource={quoteattr(cell.left)}/>",
                f"  <entity2 rdf:resource={quoteattr(cell.right)}/>",
                f"  <relation>{escape(cell.relation)}</relation>",
                '  <measure rdf:datatype="http://www.w3.org/2001/XMLSchema#float">'
                f"{cell.confidence:.6f}</measure>",
                "</Cell>",
                "</map>",
            ]
        )
    lines.extend(["</Alignment>", "</rdf:RDF>", ""])
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _cell_to_dict(cell_el: ET.Element) -> dict | None:
    entity1 = entity2 = relation = None
    measure = 1.0
    for child in cell_el.iter():
        name = _local(child.tag)
        if name == "entity1":
            entity1 = child.get(_RDF_RESOURCE) or child.get("resource") or (child.text or "").strip()
        elif name == "entity2":
            entity2 = child.get(_RDF_RESOURCE) or child.get("resource") or (child.text or "").strip()
        elif name == "relation":
            relation = (child.text or "").strip()
        elif name == "measure":
            try:
                measure = float((child.text or "").strip())
            except ValueError:
                return None
    if not entity1 or not entity2 or relation is None:
        return None
    return {"entity1": entity1, "entity2": entity2, "relation": relation, "measure": measure}


def read_rdf_cells(path: str) -> list[dict]:
    """Cells from an Alignment-format file; malformed cells skipped with a warning."""
    root = ET.parse(path).getroot()
    cells = []
    for element in root.iter():
        if _local(element.tag) == "Cell":
            cell = _cell_to_dict(element)
            if cell is None:
                logger.warning("%s: skipping cell with missing fields", path)
            else:
                cells.append(cell)
    return cells


def read_reference_json(path: str) -> list[dict]:
    """Reference alignment as converted by corpus-prep: a JSON array of
    {entity1, entity2, relation, measure} objects.
    """
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise ValueError(f"{path}: reference document must be a JSON array")
    cells = []
    for item in data:
        cells.append(
            {
                "entity1": item["entity1"],
                "entity2": item["entity2"],
                "relation": item.get("relation", "="),
                "measure": float(item.get("measure", 1.0)),
            }
        )
    return cells


def cells_to_alignment(cells: list[dict]) -> AlignmentSet:
    seen = set()
    out = []
    for cell in cells:
        key = (cell["entity1"], cell["entity2"])
        if key in seen:
            continue
        seen.add(key)
        out.append(
            AlignmentCell(
                left=cell["entity1"],
                right=cell["entity2"],
                relation=cell["relation"],
                confidence=min(1.0, max(0.0, cell["measure"])),
            )
        )
    return AlignmentSet(out)


def load_alignment(path: str) -> AlignmentSet:
    """Sniff the format (reference JSON, Alignment RDF/XML, or TSV) and load."""
    with open(path, encoding="utf-8") as fh:
        head = fh.read(512).lstrip()
    if head.startswith(("[", "{")):
        return cells_to_alignment(read_reference_json(path))
    if head.startswith("<"):
        return cells_to_alignment(read_rdf_cells(path))
    return read_tsv(path)
