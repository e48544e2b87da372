import json
from pathlib import Path

import pytest
from conftest import FIXTURES, write_toy_run_config

from ontogat.cli import main


def run_toy_train(tmp_path, **overrides):
    config_path = write_toy_run_config(tmp_path, **overrides)
    code = main(["train", "--config", config_path])
    return config_path, code


class TestTrain:
    def test_toy_fixture_outputs(self, tmp_path, capsys):
        config_path, code = run_toy_train(tmp_path)
        assert code == 0
        assert (tmp_path / "model.ckpt").exists()
        threshold = float((tmp_path / "threshold.txt").read_text().strip())
        assert 0.0 < threshold < 1.0
        loss_lines = (tmp_path / "loss.csv").read_text().splitlines()
        assert loss_lines[0] == "epoch,mean_loss"
        assert len(loss_lines) == 6

    def test_missing_embedding_file(self, tmp_path, capsys):
        config_path, code = run_toy_train(
            tmp_path, embeddings_a=str(tmp_path / "nowhere.emb")
        )
        assert code == 2
        assert "embeddings a file not found" in capsys.readouterr().err

    def test_zero_epochs_rejected_before_work(self, tmp_path, capsys):
        _, code = run_toy_train(tmp_path, epochs=0)
        assert code == 2
        assert "epochs" in capsys.readouterr().err
        assert not (tmp_path / "model.ckpt").exists()

    def test_unknown_config_key_rejected(self, tmp_path, capsys):
        _, code = run_toy_train(tmp_path, **{"learning_rte": 0.5})
        assert code == 2
        assert "unknown config key" in capsys.readouterr().err


class TestMatch:
    def test_outputs_align(self, tmp_path, capsys):
        config_path, _ = run_toy_train(tmp_path)
        code = main(["match", "--config", config_path])
        assert code == 0
        tsv_lines = (tmp_path / "alignment.tsv").read_text().splitlines()
        rdf_text = (tmp_path / "alignment.rdf").read_text()
        assert len(tsv_lines) == rdf_text.count("<Cell>")

    def test_threshold_override_above_one_empties_output(self, tmp_path):
        config_path, _ = run_toy_train(tmp_path)
        code = main(["match", "--config", config_path, "--threshold", "1.01"])
        assert code == 0
        assert (tmp_path / "alignment.tsv").read_text() == ""
        rdf_text = (tmp_path / "alignment.rdf").read_text()
        assert rdf_text.startswith('<?xml version="1.0"')
        assert "<Cell>" not in rdf_text

    def test_dimension_mismatch_reports_both_values(self, tmp_path, capsys):
        config_path, _ = run_toy_train(tmp_path)
        # rewrite config to point embeddings at a different dimension
        config = json.loads(Path(config_path).read_text())
        other = tmp_path / "wrong.emb"
        other.write_text("8\nfoo\t1 1 1 1 1 1 1 1\n")
        config["embeddings_a"] = str(other)
        config["embeddings_b"] = str(other)
        Path(config_path).write_text(json.dumps(config))
        code = main(["match", "--config", config_path])
        assert code == 2
        err = capsys.readouterr().err
        assert "32" in err and "8" in err

    def test_missing_checkpoint(self, tmp_path, capsys):
        config_path = write_toy_run_config(tmp_path)
        code = main(["match", "--config", config_path])
        assert code == 2
        assert "model file not found" in capsys.readouterr().err


class TestEval:
    def test_system_equals_reference(self, tmp_path, capsys):
        reference = str(FIXTURES / "toy/reference.json")
        code = main(
            [
                "eval",
                "--system",
                reference,
                "--reference",
                reference,
                "--variant",
                "m1",
                "--ontologies",
                str(FIXTURES / "toy/confA.json"),
                str(FIXTURES / "toy/confB.json"),
            ]
        )
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "case,variant,precision,f05,f1,f2,recall,tp,fp,fn"
        assert out[1].startswith("reference,m1,1.000000,1.000000,1.000000,1.000000,1.000000,")
        assert out[2].startswith("ALL,m1,1.000000,")

    def test_empty_system_conventions(self, tmp_path, capsys):
        empty = tmp_path / "empty.tsv"
        empty.write_text("")
        code = main(
            [
                "eval",
                "--system",
                str(empty),
                "--reference",
                str(FIXTURES / "toy/reference.json"),
                "--variant",
                "m1",
                "--ontologies",
                str(FIXTURES / "toy/confA.json"),
                str(FIXTURES / "toy/confB.json"),
            ]
        )
        assert code == 0
        row = capsys.readouterr().out.splitlines()[1].split(",")
        assert row[2] == "1.000000"  # precision convention
        assert row[4] == "0.000000"  # f1
        assert row[6] == "0.000000"  # recall

    def test_bad_variant_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--system", "x", "--reference", "y", "--variant", "m9",
                  "--ontologies", "a", "b"])
        assert exc.value.code == 2


class TestGradcheck:
    def test_single_seed_passes(self, capsys):
        assert main(["gradcheck", "--seed", "0"]) == 0
        out = capsys.readouterr().out
        assert "seed 0: pass" in out
        assert "max relative error per parameter block:" in out

    def test_corrupted_gradient_fails(self, capsys):
        assert main(["gradcheck", "--seed", "0", "--corrupt", "dense.b"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_multiple_seeds_one_line_each(self, capsys):
        assert main(["gradcheck", "--seed", "0", "--seeds", "10"]) == 0
        out = capsys.readouterr().out
        assert sum(1 for line in out.splitlines() if ": pass" in line) == 10


class TestDeterminism:
    def test_rerun_is_byte_identical(self, tmp_path):
        outputs = {}
        for run in ("one", "two"):
            directory = tmp_path / run
            directory.mkdir()
            config_path = write_toy_run_config(directory)
            assert main(["train", "--config", config_path]) == 0
            assert main(["match", "--config", config_path]) == 0
            outputs[run] = {
                name: (directory / name).read_bytes()
                for name in ("model.ckpt", "threshold.txt", "loss.csv", "alignment.tsv", "alignment.rdf")
            }
        assert outputs["one"] == outputs["two"]
