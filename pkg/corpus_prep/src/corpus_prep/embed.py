"""Export sentence embeddings for (id, text) terms into the embedding file
format consumed by the alignment core.

Default encoder is the documented deterministic hash (the same function the
core uses for out-of-vocabulary fallback), so exports reproduce the core's
expectations byte for byte and work offline. Any sentence-transformers
model can be substituted with --encoder sbert:<model>; the core is
encoder-agnostic as long as dimensions are consistent.
"""

from __future__ import annotations

import hashlib
import math


class EmbedError(ValueError):
    pass


def hash_sentence_vector(text: str, dim: int, seed: int = 0) -> list[float]:
    """Deterministic unit vector: component i = blake2b-64 of
    "<seed>\\x1f<text>\\x1f<i>" (UTF-8), little-endian u64 mapped to [-1, 1)
    via u / 2**63 - 1, divided by sqrt(fsum(c_i^2)). The exactly-rounded
    fsum keeps the bytes identical to the alignment core's hash backend.
    """
    if dim < 1:
        raise EmbedError("dim must be >= 1")
    prefix = f"{seed}\x1f{text}\x1f".encode("utf-8")
    components = []
    for i in range(dim):
        digest = hashlib.blake2b(prefix + str(i).encode("ascii"), digest_size=8)
        components.append(int.from_bytes(digest.digest(), "little") / 2.0**63 - 1.0)
    norm = math.sqrt(math.fsum(c * c for c in components))
    if norm < 1e-12:
        components[0] = 1.0
        norm = 1.0
    return [c / norm for c in components]


def read_terms(path: str) -> list[tuple[str, str]]:
    """id<TAB>text rows; duplicate ids abort."""
    terms = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                term_id, text = line.split("\t", 1)
            except ValueError:
                raise EmbedError(f"{path}:{lineno}: expected id<TAB>text") from None
            if term_id in seen:
                raise EmbedError(f"{path}:{lineno}: duplicate id {term_id!r}")
            seen.add(term_id)
            terms.append((term_id, text))
    return terms


def _hash_encoder(dim: int, seed: int):
    def encode(texts: list[str]) -> list[list[float]]:
        return [hash_sentence_vector(text, dim, seed) for text in texts]

    return encode, dim


def _sbert_encoder(model_name: str):
    try:
        from sentence_transformers import SentenceTransformer
    except ImportError as exc:
        raise EmbedError("sentence-transformers is not installed") from exc
    try:
        model = SentenceTransformer(model_name)
    except Exception as exc:
        raise EmbedError(f"cannot load encoder {model_name!r}: {exc}") from exc

    def encode(texts: list[str]) -> list[list[float]]:
        return [[float(x) for x in row] for row in model.encode(texts)]

    return encode, model.get_sentence_embedding_dimension()


def export_embeddings(
    terms: list[tuple[str, str]],
    out_path: str,
    dim: int,
    encoder: str = "hash",
    seed: int = 0,
) -> int:
    """Write one embedding row per term; returns the row count."""
    if encoder == "hash":
        encode, native_dim = _hash_encoder(dim, seed)
    elif encoder.startswith("sbert:"):
        encode, native_dim = _sbert_encoder(encoder.split(":", 1)[1])
    else:
        raise EmbedError(f"unknown encoder {encoder!r} (use 'hash' or 'sbert:<model>')")
    if native_dim != dim:
        raise EmbedError(f"encoder emits dimension {native_dim}, --dim says {dim}")

    vectors = encode([text for _, text in terms])
    with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{dim}\n")
        for (term_id, _), vector in zip(terms, vectors):
            if len(vector) != dim:
                raise EmbedError(f"encoder returned {len(vector)} floats for {term_id!r}")
            fh.write(term_id + "\t" + " ".join(repr(float(x)) for x in vector) + "\n")
    return len(terms)
