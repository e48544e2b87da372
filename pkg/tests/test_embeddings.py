import hashlib

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ontogat.embeddings import (
    EmbeddingFileError,
    EmbeddingTable,
    entity_vector,
    feature_vector,
    hash_vector,
    load_embeddings,
    merge_tables,
    write_embeddings,
)


def oracle_hash_vector(token, dim, seed):
    """Straight-line restatement of the documented hash: blake2b-64 of
    "<seed>\\x1f<token>\\x1f<i>", little-endian u64, mapped to [-1, 1),
    then divided by sqrt(fsum of squares).
    """
    import math

    raw = []
    for i in range(dim):
        data = f"{seed}\x1f{token}\x1f{i}".encode("utf-8")
        digest = hashlib.blake2b(data, digest_size=8).digest()
        raw.append(int.from_bytes(digest, "little") / 2**63 - 1.0)
    norm = math.sqrt(math.fsum(c * c for c in raw))
    return np.array([c / norm for c in raw])


class TestHashVector:
    def test_matches_hand_oracle(self):
        for token, dim, seed in [("author", 8, 0), ("paper", 5, 7), ("x", 1, 3)]:
            np.testing.assert_allclose(
                hash_vector(token, dim, seed), oracle_hash_vector(token, dim, seed), atol=1e-15
            )

    def test_deterministic(self):
        np.testing.assert_array_equal(hash_vector("chair", 16, 2), hash_vector("chair", 16, 2))

    def test_unit_norm(self):
        for token in ["conference", "reviewer", "42"]:
            assert abs(np.linalg.norm(hash_vector(token, 64, 0)) - 1.0) < 1e-9

    def test_components_in_range(self):
        vec = hash_vector("member", 128, 0)
        assert np.all(vec >= -1.0) and np.all(vec <= 1.0)

    def test_fifty_token_pairwise_cosines_stay_small(self):
        # 512-dim random unit vectors concentrate near orthogonality
        vectors = [hash_vector(f"tok{i:02d}", 512, 0) for i in range(50)]
        for i in range(50):
            for j in range(i + 1, 50):
                cos = float(vectors[i] @ vectors[j])
                assert -0.3 < cos < 0.3


class TestFileFormat:
    def test_round_trip(self, tmp_path):
        path = str(tmp_path / "t.emb")
        rows = [("alpha", np.array([1.0, -0.5, 0.25])), ("beta", np.array([0.0, 2.0, -3.5]))]
        write_embeddings(path, 3, rows)
        table = load_embeddings(path)
        assert table.dim == 3
        assert len(table) == 2
        np.testing.assert_array_equal(table.lookup("alpha"), rows[0][1])

    def test_header_512_three_rows(self, tmp_path):
        path = str(tmp_path / "t.emb")
        rows = [(f"id{i}", np.full(512, float(i))) for i in range(3)]
        write_embeddings(path, 512, rows)
        table = load_embeddings(path)
        assert table.dim == 512
        assert len(table) == 3

    def test_dimension_mismatch_names_line(self, tmp_path):
        path = tmp_path / "bad.emb"
        path.write_text("4\nok\t1 2 3 4\nbad\t1 2 3\n")
        with pytest.raises(EmbeddingFileError, match=":3"):
            load_embeddings(str(path))

    def test_duplicate_id(self, tmp_path):
        path = tmp_path / "dup.emb"
        path.write_text("2\na\t1 2\na\t3 4\n")
        with pytest.raises(EmbeddingFileError, match="duplicate"):
            load_embeddings(str(path))

    def test_header_only(self, tmp_path):
        path = tmp_path / "empty.emb"
        path.write_text("16\n")
        table = load_embeddings(str(path))
        assert table.dim == 16
        assert len(table) == 0

    def test_non_finite_rejected(self, tmp_path):
        path = tmp_path / "nan.emb"
        path.write_text("2\na\tnan 1\n")
        with pytest.raises(EmbeddingFileError, match="non-finite"):
            load_embeddings(str(path))

    def test_write_is_byte_reproducible(self, tmp_path):
        rows = [("k", np.array([0.1, -1e-7, 3.14159]))]
        p1, p2 = str(tmp_path / "a.emb"), str(tmp_path / "b.emb")
        write_embeddings(p1, 3, rows)
        write_embeddings(p2, 3, rows)
        assert open(p1, "rb").read() == open(p2, "rb").read()


class TestEntityVector:
    def test_singleton_mean(self):
        table = EmbeddingTable(2, {"a": np.array([1.0, 2.0])})
        np.testing.assert_array_equal(entity_vector(table, ["a"]), [1.0, 2.0])

    def test_arithmetic_mean(self):
        table = EmbeddingTable(2, {"a": np.array([1.0, 0.0]), "b": np.array([0.0, 1.0])})
        np.testing.assert_allclose(entity_vector(table, ["a", "b"]), [0.5, 0.5])

    def test_oov_uses_hash_fallback(self):
        table = EmbeddingTable(4, {"a": np.ones(4)}, oov_seed=9)
        expected = (np.ones(4) + oracle_hash_vector("zzz", 4, 9)) / 2
        np.testing.assert_allclose(entity_vector(table, ["a", "zzz"]), expected, atol=1e-15)

    def test_empty_bag_rejected(self):
        table = EmbeddingTable(2, {"a": np.zeros(2)})
        with pytest.raises(ValueError, match="empty bag"):
            entity_vector(table, [])

    @given(st.permutations(["a", "b", "c", "a"]))
    def test_order_invariant(self, bag):
        table = EmbeddingTable(
            3,
            {
                "a": np.array([1.0, 0.0, 2.0]),
                "b": np.array([0.0, 1.0, -1.0]),
                "c": np.array([4.0, 4.0, 4.0]),
            },
        )
        np.testing.assert_allclose(
            entity_vector(table, list(bag)), entity_vector(table, ["a", "a", "b", "c"])
        )


class TestFeatureVector:
    def test_label_sentence_prefers_entity_row(self):
        table = EmbeddingTable(2, {"http://x/A": np.array([5.0, 5.0]), "a": np.array([1.0, 1.0])})
        vec = feature_vector(table, "http://x/A", ["a"], "label-sentence")
        np.testing.assert_array_equal(vec, [5.0, 5.0])

    def test_label_sentence_falls_back_to_token_mean(self):
        table = EmbeddingTable(2, {"a": np.array([1.0, 3.0])})
        vec = feature_vector(table, "http://x/A", ["a"], "label-sentence")
        np.testing.assert_array_equal(vec, [1.0, 3.0])

    def test_token_mean_ignores_entity_row(self):
        table = EmbeddingTable(2, {"http://x/A": np.array([5.0, 5.0]), "a": np.array([1.0, 3.0])})
        vec = feature_vector(table, "http://x/A", ["a"], "token-mean")
        np.testing.assert_array_equal(vec, [1.0, 3.0])

    def test_unknown_granularity(self):
        table = EmbeddingTable(2, {"a": np.zeros(2)})
        with pytest.raises(ValueError, match="granularity"):
            feature_vector(table, "x", ["a"], "word-soup")


class TestMerge:
    def test_merges_disjoint(self):
        t1 = EmbeddingTable(2, {"a": np.array([1.0, 0.0])})
        t2 = EmbeddingTable(2, {"b": np.array([0.0, 1.0])})
        merged = merge_tables([t1, t2])
        assert len(merged) == 2

    def test_identical_rows_tolerated(self):
        vec = np.array([1.0, 2.0])
        merged = merge_tables([EmbeddingTable(2, {"a": vec}), EmbeddingTable(2, {"a": vec.copy()})])
        assert len(merged) == 1

    def test_conflicting_rows_rejected(self):
        t1 = EmbeddingTable(2, {"a": np.array([1.0, 0.0])})
        t2 = EmbeddingTable(2, {"a": np.array([0.0, 1.0])})
        with pytest.raises(EmbeddingFileError, match="conflicting"):
            merge_tables([t1, t2])

    def test_dim_mismatch_rejected(self):
        with pytest.raises(EmbeddingFileError, match="dimension mismatch"):
            merge_tables([EmbeddingTable(2, {}), EmbeddingTable(3, {})])
