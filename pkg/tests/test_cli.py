from __future__ import annotations

import json
import math

import numpy as np
import pytest

from depthf1.cli import main, render_report
from depthf1.corpus import load_corpus
from depthf1.metrics import evaluate_sweep

from conftest import corpus_records, write_jsonl


@pytest.fixture
def corpus_path(tmp_path):
    rng = np.random.default_rng(12)
    labels = [str(int(x)) for x in rng.integers(0, 3, size=20)]
    predictions = [str(int(x)) for x in rng.integers(0, 3, size=20)]
    records = corpus_records(
        rng.normal(size=(30, 4)),
        rng.normal(size=(20, 4)),
        source_labels=[str(int(x)) for x in rng.integers(0, 3, size=30)],
        target_labels=labels,
        predictions=predictions,
    )
    return write_jsonl(tmp_path / "corpus.jsonl", records)


@pytest.fixture
def predictions_path(tmp_path, corpus_path):
    corpus = load_corpus(corpus_path)
    rng = np.random.default_rng(40)
    rows = [
        {"id": s.id, "prediction": str(int(rng.integers(0, 3)))}
        for s in corpus.target
    ]
    return write_jsonl(tmp_path / "preds.jsonl", rows)


def run_cli(args, capsys):
    code = main(args)
    return code, capsys.readouterr().out


class TestEvaluate:
    def test_csv_layout(self, corpus_path, predictions_path, capsys):
        code, out = run_cli(
            [
                "evaluate",
                "--corpus", str(corpus_path),
                "--predictions", str(predictions_path),
                "--lambdas", "0,25,50,75,90",
                "--format", "csv",
            ],
            capsys,
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "lambda,kept_count,micro_f1,df1,degenerate"
        assert len(lines) == 6
        assert lines[1].startswith("0,20,")

    def test_json_is_key_sorted_and_newline_terminated(self, corpus_path, capsys):
        code, out = run_cli(["evaluate", "--corpus", str(corpus_path)], capsys)
        assert code == 0
        assert out.endswith("\n")
        doc = json.loads(out)
        assert list(doc) == sorted(doc)
        assert [row["lambda"] for row in doc["rows"]] == [0, 25, 50, 75, 90]
        assert "timestamp" not in json.dumps(doc)

    def test_json_and_csv_carry_identical_values(self, corpus_path, capsys):
        _, json_out = run_cli(["evaluate", "--corpus", str(corpus_path)], capsys)
        _, csv_out = run_cli(["evaluate", "--corpus", str(corpus_path), "--format", "csv"], capsys)
        doc = json.loads(json_out)
        lines = csv_out.strip().split("\n")[1:]
        for row, line in zip(doc["rows"], lines):
            lam, kept, micro, df1, degenerate = line.split(",")
            assert row["lambda"] == int(lam)
            assert row["kept_count"] == int(kept)
            assert row["micro_f1"] == float(micro)
            if row["df1"] is None:
                assert df1 == ""
            else:
                assert row["df1"] == float(df1)
            assert row["degenerate"] == (degenerate == "true")

    def test_inline_predictions_suffice(self, corpus_path, capsys):
        code, out = run_cli(["evaluate", "--corpus", str(corpus_path)], capsys)
        assert code == 0
        assert json.loads(out)["rows"]

    def test_missing_predictions_exit_one(self, tmp_path, capsys):
        path = write_jsonl(
            tmp_path / "nopreds.jsonl", corpus_records([[1, 0]], [[0, 1]])
        )
        code = main(["evaluate", "--corpus", str(path)])
        err = capsys.readouterr().err
        assert code == 1
        assert "error" in err

    def test_degenerate_row_renders_empty_df1(self, tmp_path, capsys):
        inv = 1.0 / math.sqrt(2.0)
        records = corpus_records(
            [[1.0, 0.0], [0.0, 1.0]], [[inv, inv]], predictions=["a"]
        )
        path = write_jsonl(tmp_path / "deep.jsonl", records)
        code, out = run_cli(
            ["evaluate", "--corpus", str(path), "--lambdas", "0", "--format", "csv"], capsys
        )
        assert code == 0
        assert out.strip().split("\n")[1] == "0,1,1.000000,,true"

    def test_output_file(self, corpus_path, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        code = main(["evaluate", "--corpus", str(corpus_path), "--output", str(out_path)])
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(out_path.read_text())["rows"]


class TestUsageErrors:
    def test_empty_lambda_grid(self, corpus_path):
        with pytest.raises(SystemExit) as err:
            main(["evaluate", "--corpus", str(corpus_path), "--lambdas", ""])
        assert err.value.code == 2

    def test_non_increasing_lambdas(self, corpus_path):
        with pytest.raises(SystemExit) as err:
            main(["evaluate", "--corpus", str(corpus_path), "--lambdas", "50,25"])
        assert err.value.code == 2

    def test_lambda_out_of_range(self, corpus_path):
        with pytest.raises(SystemExit) as err:
            main(["evaluate", "--corpus", str(corpus_path), "--lambdas", "0,100"])
        assert err.value.code == 2

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_missing_file_exits_one(self, capsys):
        assert main(["qstat", "--corpus", "/nonexistent/c.jsonl"]) == 1


class TestValidate:
    def test_ok_corpus_exits_zero(self, corpus_path, capsys):
        code, out = run_cli(["validate", "--corpus", str(corpus_path)], capsys)
        assert code == 0
        assert json.loads(out) == {"ok": True, "issues": []}

    def test_issues_exit_one(self, tmp_path, capsys):
        records = corpus_records([[1, 0]], [[0, 1]], predictions=["not-a-label"])
        path = write_jsonl(tmp_path / "bad.jsonl", records)
        code, out = run_cli(["validate", "--corpus", str(path)], capsys)
        assert code == 1
        doc = json.loads(out)
        assert not doc["ok"]
        assert doc["issues"][0]["code"] == "UNKNOWN_PREDICTED_LABEL"


class TestSmallCommands:
    def test_qstat_json_shape(self, corpus_path, capsys):
        code, out = run_cli(["qstat", "--corpus", str(corpus_path)], capsys)
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"q", "pairs"}
        assert doc["pairs"] == 30 * 20

    def test_depth_lists_all_samples(self, corpus_path, capsys):
        code, out = run_cli(["depth", "--corpus", str(corpus_path)], capsys)
        doc = json.loads(out)
        assert code == 0
        assert doc["reference_size"] == 30
        assert len(doc["scores"]) == 50

    def test_median_fields(self, corpus_path, capsys):
        code, out = run_cli(["median", "--corpus", str(corpus_path)], capsys)
        doc = json.loads(out)
        assert set(doc) == {"index", "id", "depth"}
        assert doc["id"].startswith("s")

    def test_weights_cover_grid(self, corpus_path, capsys):
        code, out = run_cli(
            ["weights", "--corpus", str(corpus_path), "--lambdas", "0,50"], capsys
        )
        doc = json.loads(out)
        assert [block["lambda"] for block in doc["lambdas"]] == [0, 50]
        assert len(doc["lambdas"][0]["weights"]) == 20
        total = sum(entry["weight"] for entry in doc["lambdas"][0]["weights"])
        assert total == pytest.approx(1.0, abs=1e-4)


class TestDemoCommand:
    def test_csv_writes_two_files(self, tmp_path):
        out = tmp_path / "curves.csv"
        code = main(
            ["demo", "--seeds", "2", "--lambdas", "0,50", "--format", "csv",
             "--output", str(out), "--seed", "3"]
        )
        assert code == 0
        path_a = tmp_path / "curves.model_a.csv"
        path_b = tmp_path / "curves.model_b.csv"
        assert path_a.exists() and path_b.exists()
        header = "lambda,df1_mean,df1_std,micro_f1_mean,micro_f1_std"
        assert path_a.read_text().split("\n")[0] == header
        assert len(path_a.read_text().strip().split("\n")) == 3

    def test_json_single_document(self, capsys):
        code, out = run_cli(["demo", "--seeds", "2", "--lambdas", "0,50"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["seeds"] == 2
        assert [p["lambda"] for p in doc["model_a"]] == [0, 50]
        assert [p["lambda"] for p in doc["model_b"]] == [0, 50]

    def test_invalid_seeds(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["demo", "--seeds", "0"])
        assert err.value.code == 2


class TestDeterminism:
    def test_evaluate_byte_identical(self, corpus_path, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            assert main(["evaluate", "--corpus", str(corpus_path), "--output", str(path)]) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_demo_byte_identical(self, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            assert main(["demo", "--seeds", "2", "--output", str(path)]) == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_render_report_matches_cli_output(self, corpus_path, capsys):
        _, out = run_cli(["evaluate", "--corpus", str(corpus_path)], capsys)
        report = evaluate_sweep(load_corpus(corpus_path))
        assert render_report(report, "json").decode("utf-8") == out
