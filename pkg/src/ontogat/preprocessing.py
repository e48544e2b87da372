"""Label preprocessing: tokenization, abbreviation expansion, stopword removal.

Turns an entity label into the bag of words that represents the entity
downstream. All functions are pure; the shipped stopword list and
abbreviation table live in ontogat/data/.
"""

from __future__ import annotations

import re
from importlib import resources

# camelCase / acronym / digit-run boundaries within one fragment
_TOKEN_RE = re.compile(r"[A-Z]+(?![a-z])|[A-Z][a-z]*|[a-z]+|[0-9]+")
_SEPARATOR_RE = re.compile(r"[\s_\-]+")


def tokenize(label: str) -> list[str]:
    """Split a label on camelCase, underscore, hyphen, digit and whitespace
    boundaries; lowercase everything; drop empty fragments.

    "ConferenceMember" -> ["conference", "member"]
    "PCMember2"        -> ["pc", "member", "2"]
    """
    tokens = []
    for fragment in _SEPARATOR_RE.split(label):
        tokens.extend(match.group(0).lower() for match in _TOKEN_RE.finditer(fragment))
    return tokens


class AbbreviationDict:
    """Lowercase abbreviation -> expansion phrase, validated acyclic.

    Rejects self-mappings and expansion chains that loop (a -> "b", b -> "a"),
    so repeated expansion always reaches a fixpoint containing no keys.
    """

    def __init__(self, entries: dict[str, str]):
        self.entries: dict[str, str] = {}
        for key, expansion in entries.items():
            key = key.lower()
            expansion_tokens = tokenize(expansion)
            if expansion_tokens == [key]:
                raise ValueError(f"abbreviation {key!r} maps to itself")
            self.entries[key] = expansion
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        for start in self.entries:
            seen = {start}
            frontier = [t for t in tokenize(self.entries[start]) if t in self.entries]
            while frontier:
                key = frontier.pop()
                if key in seen:
                    raise ValueError(f"abbreviation cycle through {key!r}")
                seen.add(key)
                frontier.extend(
                    t for t in tokenize(self.entries[key]) if t in self.entries
                )

    def __contains__(self, token: str) -> bool:
        return token in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def expand_abbreviations(tokens: list[str], abbrev: AbbreviationDict) -> list[str]:
    """Replace each token that is an abbreviation key by its expansion tokens,
    in place, until no key remains (the dictionary is acyclic by construction).
    """
    out: list[str] = []
    stack = list(reversed(tokens))
    while stack:
        token = stack.pop()
        if token in abbrev:
            stack.extend(reversed(tokenize(abbrev.entries[token])))
        else:
            out.append(token)
    return out


def remove_stopwords(tokens: list[str], stopwords: set[str]) -> list[str]:
    """Filter stopwords, preserving order. If every token is a stopword the
    original list is returned, so a nonempty label never yields an empty bag.
    """
    kept = [t for t in tokens if t not in stopwords]
    if not kept and tokens:
        return list(tokens)
    return kept


def _read_data_file(name: str) -> str:
    return resources.files("ontogat.data").joinpath(name).read_text("utf-8")


def load_stopwords() -> set[str]:
    """Shipped English stopword list, one token per line."""
    words = set()
    for line in _read_data_file("stopwords.txt").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return words


def load_abbreviations() -> AbbreviationDict:
    """Shipped abbreviation table, key<TAB>expansion per line."""
    entries = {}
    for line in _read_data_file("abbreviations.tsv").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, expansion = line.split("\t", 1)
        entries[key] = expansion
    return AbbreviationDict(entries)


def bag_of_words(
    label: str,
    abbrev: AbbreviationDict | None = None,
    stopwords: set[str] | None = None,
) -> list[str]:
    """Full preprocessing chain for one label: tokenize, expand, de-stopword."""
    tokens = tokenize(label)
    if abbrev is not None:
        tokens = expand_abbreviations(tokens, abbrev)
    if stopwords is not None:
        tokens = remove_stopwords(tokens, stopwords)
    return tokens
