"""Turtle reader for the subset OWL ontologies are commonly written in.

Supports @prefix/@base directives, IRIs, prefixed names, `a`, string
literals (with language tags or datatypes), numeric literals, comma and
semicolon lists, comments, and nested blank node property lists
(`[ owl:onProperty :p ; ... ]`). Collections and multiline strings are out
of scope.
"""

from __future__ import annotations

import re

from .triples import IRI, LITERAL, RDF_NS, ParseFailure, Triple

_TOKEN_RE = re.compile(
    r"""
    (?P<comment>\#[^\n]*)
  | (?P<iriref><[^<>\s]*>)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<directive>@prefix|@base)
  | (?P<langtag>@[A-Za-z][A-Za-z0-9-]*)
  | (?P<caret>\^\^)
  | (?P<number>[+-]?[0-9]+(?:\.[0-9]+)?)
  | (?P<pname>(?:[A-Za-z_][\w-]*)?:(?:[\w][\w-]*)?)
  | (?P<keyword>a)(?![\w-])
  | (?P<punct>[;,.\[\]()])
  | (?P<ws>\s+)
  | (?P<bad>.)
    """,
    re.VERBOSE,
)

_STRING_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", '"': '"', "\\": "\\", "'": "'"}


def _unescape(raw: str) -> str:
    out = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch == "\\" and i + 1 < len(raw):
            out.append(_STRING_ESCAPES.get(raw[i + 1], raw[i + 1]))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


class _Token:
    __slots__ = ("kind", "value", "line")

    def __init__(self, kind, value, line):
        self.kind = kind
        self.value = value
        self.line = line

    def __repr__(self):
        return f"{self.kind}({self.value!r})"


def _tokenize(text: str, path: str) -> list[_Token]:
    tokens = []
    line = 1
    for match in _TOKEN_RE.finditer(text):
        kind = match.lastgroup
        value = match.group(0)
        if kind in ("ws", "comment"):
            line += value.count("\n")
            continue
        if kind == "bad":
            raise ParseFailure(f"{path}:{line}: unexpected character {value!r}")
        tokens.append(_Token(kind, value, line))
        line += value.count("\n")
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], path: str):
        self.tokens = tokens
        self.path = path
        self.pos = 0
        self.prefixes: dict[str, str] = {}
        self.base = ""
        self.triples: list[Triple] = []
        self._blank_counter = 0

    def error(self, message: str):
        line = self.tokens[self.pos].line if self.pos < len(self.tokens) else "eof"
        raise ParseFailure(f"{self.path}:{line}: {message}")

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> _Token:
        token = self.peek()
        if token is None:
            self.error("unexpected end of file")
        self.pos += 1
        return token

    def expect_punct(self, char: str) -> None:
        token = self.next()
        if token.kind != "punct" or token.value != char:
            self.error(f"expected {char!r}, found {token.value!r}")

    def new_blank(self) -> str:
        self._blank_counter += 1
        return f"_:t{self._blank_counter}"

    def expand_iri(self, token: _Token) -> str:
        if token.kind == "iriref":
            iri = token.value[1:-1]
            if not iri:
                return self.base
            if "://" not in iri and self.base and not iri.startswith("#"):
                return self.base + iri
            if iri.startswith("#"):
                return self.base + iri
            return iri
        if token.kind == "pname":
            prefix, _, local = token.value.partition(":")
            if prefix not in self.prefixes:
                self.error(f"unknown prefix {prefix!r}")
            return self.prefixes[prefix] + local
        self.error(f"expected an IRI, found {token.value!r}")

    def parse(self) -> list[Triple]:
        while self.peek() is not None:
            token = self.peek()
            if token.kind == "directive":
                self.directive()
            else:
                self.triples_block()
        return self.triples

    def directive(self) -> None:
        which = self.next().value
        if which == "@prefix":
            name_token = self.next()
            if name_token.kind != "pname" or not name_token.value.endswith(":"):
                self.error("expected prefix name")
            prefix = name_token.value[:-1]
            self.prefixes[prefix] = self.expand_iri(self.next())
        else:
            self.base = self.expand_iri(self.next())
        self.expect_punct(".")

    def triples_block(self) -> None:
        subject = self.subject()
        self.predicate_object_list(subject)
        self.expect_punct(".")

    def subject(self) -> str:
        token = self.peek()
        if token.kind == "punct" and token.value == "[":
            return self.blank_node_property_list()
        return self.expand_iri(self.next())

    def predicate_object_list(self, subject: str) -> None:
        while True:
            token = self.next()
            if token.kind == "keyword" and token.value == "a":
                predicate = RDF_NS + "type"
            else:
                predicate = self.expand_iri(token)
            self.object_list(subject, predicate)
            token = self.peek()
            if token is not None and token.kind == "punct" and token.value == ";":
                self.next()
                follow = self.peek()
                # trailing semicolon before . or ]
                if follow is not None and follow.kind == "punct" and follow.value in ".]":
                    return
                continue
            return

    def object_list(self, subject: str, predicate: str) -> None:
        while True:
            self.one_object(subject, predicate)
            token = self.peek()
            if token is not None and token.kind == "punct" and token.value == ",":
                self.next()
                continue
            return

    def one_object(self, subject: str, predicate: str) -> None:
        token = self.peek()
        if token.kind == "punct" and token.value == "[":
            obj = self.blank_node_property_list()
            self.triples.append(Triple(subject, predicate, obj, IRI))
        elif token.kind == "string":
            self.next()
            value = _unescape(token.value[1:-1])
            follow = self.peek()
            if follow is not None and follow.kind == "caret":
                self.next()
                self.expand_iri(self.next())  # datatype kept out of the lexical value
            elif follow is not None and follow.kind == "langtag":
                self.next()
            self.triples.append(Triple(subject, predicate, value, LITERAL))
        elif token.kind == "number":
            self.next()
            self.triples.append(Triple(subject, predicate, token.value, LITERAL))
        else:
            self.triples.append(Triple(subject, predicate, self.expand_iri(self.next()), IRI))

    def blank_node_property_list(self) -> str:
        self.expect_punct("[")
        blank = self.new_blank()
        token = self.peek()
        if not (token is not None and token.kind == "punct" and token.value == "]"):
            self.predicate_object_list(blank)
        self.expect_punct("]")
        return blank


def parse_turtle(path: str) -> list[Triple]:
    """Triples in document order; ParseFailure carries the offending line."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return _Parser(_tokenize(text, path), path).parse()
