"""Fixed-dimension entity/token vectors.

Default backend is a precomputed embedding file; a deterministic hashing
backend serves as the test backend and as the out-of-vocabulary fallback
(a zero vector would poison cosine similarity).

Embedding file format (UTF-8, LF line endings):
    line 1:    ASCII decimal dimension
    each row:  id<TAB>f_1<SP>f_2<SP>...<SP>f_dim
"""

from __future__ import annotations

import hashlib
import math

import numpy as np

TOKEN_MEAN = "token-mean"
LABEL_SENTENCE = "label-sentence"
GRANULARITIES = (TOKEN_MEAN, LABEL_SENTENCE)


class EmbeddingFileError(ValueError):
    """Raised on malformed embedding files."""


def hash_vector(token: str, dim: int, seed: int = 0) -> np.ndarray:
    """Deterministic unit vector for a token.

    Component i is derived from the 64-bit blake2b digest of the UTF-8 bytes
    of "<seed>\\x1f<token>\\x1f<i>", read little-endian as u64 and mapped to
    [-1, 1) via u / 2**63 - 1. The vector is then divided by
    sqrt(fsum(c_i^2)); the exactly-rounded fsum makes the bytes reproducible
    across implementations.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    components = np.empty(dim, dtype=np.float64)
    prefix = f"{seed}\x1f{token}\x1f".encode("utf-8")
    for i in range(dim):
        digest = hashlib.blake2b(prefix + str(i).encode("ascii"), digest_size=8)
        u = int.from_bytes(digest.digest(), "little")
        components[i] = u / 2.0**63 - 1.0
    norm = math.sqrt(math.fsum(c * c for c in components.tolist()))
    if norm < 1e-12:
        components[0] = 1.0
        norm = 1.0
    return components / norm


class EmbeddingTable:
    """id-or-token -> vector of length `dim`, immutable after construction."""

    def __init__(self, dim: int, vectors: dict[str, np.ndarray], oov_seed: int = 0):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        self.dim = dim
        self.oov_seed = oov_seed
        self.vectors: dict[str, np.ndarray] = {}
        for key, vec in vectors.items():
            arr = np.asarray(vec, dtype=np.float64)
            if arr.shape != (dim,):
                raise EmbeddingFileError(
                    f"vector for {key!r} has length {arr.shape}, expected {dim}"
                )
            if not np.all(np.isfinite(arr)):
                raise EmbeddingFileError(f"non-finite components in vector {key!r}")
            self.vectors[key] = arr

    def __contains__(self, key: str) -> bool:
        return key in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def lookup(self, key: str) -> np.ndarray:
        """Stored vector for key, or the hashing fallback when absent."""
        vec = self.vectors.get(key)
        if vec is None:
            return hash_vector(key, self.dim, self.oov_seed)
        return vec


def load_embeddings(path: str, oov_seed: int = 0) -> EmbeddingTable:
    """Parse an embedding file; errors name the offending line."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        if not header.strip():
            raise EmbeddingFileError(f"{path}: missing dimension header")
        try:
            dim = int(header.strip())
        except ValueError:
            raise EmbeddingFileError(f"{path}: bad dimension header {header!r}") from None
        if dim < 1:
            raise EmbeddingFileError(f"{path}: dimension must be positive, got {dim}")
        vectors: dict[str, np.ndarray] = {}
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                key, values = line.split("\t", 1)
            except ValueError:
                raise EmbeddingFileError(f"{path}:{lineno}: missing tab separator") from None
            if key in vectors:
                raise EmbeddingFileError(f"{path}:{lineno}: duplicate id {key!r}")
            fields = values.split(" ")
            if len(fields) != dim:
                raise EmbeddingFileError(
                    f"{path}:{lineno}: expected {dim} floats, got {len(fields)}"
                )
            try:
                arr = np.array([float(f) for f in fields], dtype=np.float64)
            except ValueError:
                raise EmbeddingFileError(f"{path}:{lineno}: unparseable float") from None
            if not np.all(np.isfinite(arr)):
                raise EmbeddingFileError(f"{path}:{lineno}: non-finite component")
            vectors[key] = arr
    return EmbeddingTable(dim, vectors, oov_seed=oov_seed)


def write_embeddings(path: str, dim: int, rows: list[tuple[str, np.ndarray]]) -> None:
    """Write an embedding file (floats via repr, byte-reproducible)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{dim}\n")
        for key, vec in rows:
            arr = np.asarray(vec, dtype=np.float64)
            if arr.shape != (dim,):
                raise EmbeddingFileError(f"vector for {key!r} does not have length {dim}")
            fh.write(key + "\t" + " ".join(repr(float(x)) for x in arr) + "\n")


def entity_vector(table: EmbeddingTable, bag: list[str]) -> np.ndarray:
    """Mean of the bag's token vectors (hashing fallback for OOV tokens)."""
    if not bag:
        raise ValueError("empty bag of words")
    acc = np.zeros(table.dim, dtype=np.float64)
    for token in bag:
        acc += table.lookup(token)
    return acc / len(bag)


def feature_vector(
    table: EmbeddingTable, iri: str, bag: list[str], granularity: str = LABEL_SENTENCE
) -> np.ndarray:
    """Input feature for one entity.

    label-sentence: the entity's own row in the table (falls back to the
    token mean when absent); token-mean: always the mean of token vectors.
    """
    if granularity not in GRANULARITIES:
        raise ValueError(f"unknown granularity {granularity!r}")
    if granularity == LABEL_SENTENCE and iri in table:
        return table.lookup(iri)
    return entity_vector(table, bag)


def merge_tables(tables: list[EmbeddingTable]) -> EmbeddingTable:
    """Union of tables sharing one dimension; conflicting rows are an error."""
    if not tables:
        raise ValueError("no tables to merge")
    dim = tables[0].dim
    merged: dict[str, np.ndarray] = {}
    for table in tables:
        if table.dim != dim:
            raise EmbeddingFileError(f"dimension mismatch in merge: {table.dim} vs {dim}")
        for key, vec in table.vectors.items():
            seen = merged.get(key)
            if seen is not None and not np.array_equal(seen, vec):
                raise EmbeddingFileError(f"conflicting vectors for {key!r} in merge")
            merged[key] = vec
    return EmbeddingTable(dim, merged, oov_seed=tables[0].oov_seed)
