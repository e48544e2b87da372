"""RDF/XML reader covering the striped syntax used by OWL ontology files.

Node elements (typed or rdf:Description) alternate with property elements;
rdf:about / rdf:ID name subjects, rdf:resource names object IRIs, nested
node elements become blank or named objects, and text content becomes a
literal. This is the subset the conference OWL serializations use; exotic
constructs (rdf:parseType, containers, reification) are out of scope.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .triples import IRI, LITERAL, RDF_NS, ParseFailure, Triple

_RDF_ABOUT = f"{{{RDF_NS}}}about"
_RDF_ID = f"{{{RDF_NS}}}ID"
_RDF_RESOURCE = f"{{{RDF_NS}}}resource"
_RDF_DESCRIPTION = f"{{{RDF_NS}}}Description"
_XML_BASE = "{http://www.w3.org/XML/1998/namespace}base"


def _tag_uri(element: ET.Element, path: str) -> str:
    tag = element.tag
    if not tag.startswith("{"):
        raise ParseFailure(f"{path}: element <{tag}> has no namespace")
    return tag[1:].replace("}", "")


def _resolve(reference: str, base: str) -> str:
    if not reference:
        return base
    if reference.startswith("#"):
        return base + reference
    if "://" in reference or not base:
        return reference
    return base + "/" + reference.lstrip("/")


class _Reader:
    def __init__(self, path: str, base: str):
        self.path = path
        self.base = base
        self.triples: list[Triple] = []
        self._blank_counter = 0

    def new_blank(self) -> str:
        self._blank_counter += 1
        return f"_:b{self._blank_counter}"

    def node_element(self, element: ET.Element) -> str:
        about = element.get(_RDF_ABOUT)
        node_id = element.get(_RDF_ID)
        if about is not None:
            subject = _resolve(about, self.base)
        elif node_id is not None:
            subject = f"{self.base}#{node_id}"
        else:
            subject = self.new_blank()
        tag = _tag_uri(element, self.path)
        if element.tag != _RDF_DESCRIPTION:
            self.triples.append(Triple(subject, RDF_NS + "type", tag, IRI))
        for prop in element:
            self.property_element(subject, prop)
        return subject

    def property_element(self, subject: str, prop: ET.Element) -> None:
        predicate = _tag_uri(prop, self.path)
        resource = prop.get(_RDF_RESOURCE)
        if resource is not None:
            self.triples.append(Triple(subject, predicate, _resolve(resource, self.base), IRI))
            return
        nested = list(prop)
        if nested:
            for child in nested:
                obj = self.node_element(child)
                self.triples.append(Triple(subject, predicate, obj, IRI))
            return
        text = (prop.text or "").strip()
        self.triples.append(Triple(subject, predicate, text, LITERAL))


def parse_rdfxml(path: str) -> list[Triple]:
    """Triples in document order; ParseFailure carries the offending line."""
    try:
        tree = ET.parse(path)
    except ET.ParseError as exc:
        line, column = exc.position
        raise ParseFailure(f"{path}:{line}:{column}: {exc.msg}") from exc
    root = tree.getroot()
    if root.tag != f"{{{RDF_NS}}}RDF":
        raise ParseFailure(f"{path}: root element is not rdf:RDF")
    reader = _Reader(path, root.get(_XML_BASE, ""))
    for element in root:
        reader.node_element(element)
    return reader.triples
