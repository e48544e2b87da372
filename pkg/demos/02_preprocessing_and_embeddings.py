#!/usr/bin/env python3
"""Label preprocessing and the deterministic hashing embedding backend.

Shows tokenization boundaries, abbreviation expansion against the shipped
table, stopword removal with the all-stopword fallback, and how token bags
become entity vectors whose cosine reflects token overlap.
"""

import numpy as np

from ontogat import bag_of_words, cosine_similarity, hash_vector, tokenize
from ontogat.embeddings import EmbeddingTable, entity_vector
from ontogat.preprocessing import load_abbreviations, load_stopwords

abbrev = load_abbreviations()
stopwords = load_stopwords()

print("tokenization:")
for label in ["ConferenceMember", "has_the_same_author", "PCMember2", "e-mail"]:
    print(f"  {label!r:28s} -> {tokenize(label)}")

print("\nfull preprocessing chain (abbreviations + stopwords):")
for label in ["PCMember", "MemberOfConference", "has_the_same_author", "the"]:
    print(f"  {label!r:28s} -> {bag_of_words(label, abbrev, stopwords)}")

dim = 64
tokens = sorted(
    set(
        bag_of_words(label, abbrev, stopwords)[i]
        for label in ["PCMember", "ProgramCommitteeMember", "Reviewer", "Referee", "Paper"]
        for i in range(len(bag_of_words(label, abbrev, stopwords)))
    )
)
table = EmbeddingTable(dim, {t: hash_vector(t, dim, seed=0) for t in tokens})

print(f"\nhash backend at dim {dim}: unit norms, near-orthogonal tokens")
for t in tokens[:4]:
    print(f"  |{t}| = {np.linalg.norm(table.lookup(t)):.6f}")

pairs = [
    ("PCMember", "ProgramCommitteeMember"),
    ("Reviewer", "Referee"),
    ("Reviewer", "Paper"),
]
print("\nentity-vector cosine = token overlap signal:")
for left, right in pairs:
    u = entity_vector(table, bag_of_words(left, abbrev, stopwords))
    v = entity_vector(table, bag_of_words(right, abbrev, stopwords))
    print(f"  {left} / {right}: {cosine_similarity(u, v):+.3f}")
