"""CLI contract: exit codes, deterministic files, flag validation."""

import json

import pytest
from click.testing import CliRunner

from modelarcs import model_table_to_json, parse_model_table, validate_layout_obj
from modelarcs.cli import main
from modelarcs.datasets import dataset_to_csv, demo_model_table, make_separable_dataset

from conftest import complete_table


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def table_file(tmp_path):
    path = tmp_path / "table.json"
    path.write_text(model_table_to_json(demo_model_table(6)))
    return path


@pytest.fixture
def csv_file(tmp_path):
    path = tmp_path / "data.csv"
    path.write_text(dataset_to_csv(make_separable_dataset(n_features=3, rows_per_class=20)))
    return path


class TestRender:
    def test_demo_table_counts(self, runner, table_file, tmp_path):
        out = tmp_path / "chart.svg"
        result = runner.invoke(main, ["render", str(table_file), "-o", str(out)])
        assert result.exit_code == 0, result.output
        svg = out.read_text()
        assert svg.count("<path") == 6
        assert svg.count("<line ") == 57

    def test_two_runs_byte_identical(self, runner, table_file, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for out in (a, b):
            assert runner.invoke(
                main, ["render", str(table_file), "-o", str(out)]
            ).exit_code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_zero_spanning_is_usage_error(self, runner, table_file, tmp_path):
        result = runner.invoke(
            main,
            ["render", str(table_file), "--spanning", "0", "-o", str(tmp_path / "x.svg")],
        )
        assert result.exit_code == 2
        assert "spanning" in result.output

    def test_invalid_table_is_validation_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "features": ["a", "b"],
            "models": [
                {"features": ["a"], "performance": 0.5},
                {"features": ["b"], "performance": 0.4},
                {"features": ["b", "a"], "performance": 0.6},
                {"features": ["a", "b"], "performance": 0.7},
            ],
        }))
        result = runner.invoke(main, ["render", str(bad), "-o", str(tmp_path / "x.svg")])
        assert result.exit_code == 1
        assert "duplicate subset" in result.output
        assert "'a', 'b'" in result.output  # names the offending subset

    def test_not_json_is_validation_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("this is not json")
        result = runner.invoke(main, ["render", str(bad), "-o", str(tmp_path / "x.svg")])
        assert result.exit_code == 1
        assert "invalid JSON" in result.output


class TestLayoutCmd:
    def test_emits_schema_valid_json(self, runner, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(model_table_to_json(complete_table(3)))
        result = runner.invoke(main, ["layout", str(path), "--spanning", "90"])
        assert result.exit_code == 0, result.output
        obj = json.loads(result.output)
        validate_layout_obj(obj)
        assert len(obj["arcs"]) == 3
        assert len(obj["lines"]) == 4

    def test_keys_sorted_and_rounded(self, runner, table_file):
        result = runner.invoke(main, ["layout", str(table_file)])
        obj = json.loads(result.output)
        assert list(obj) == sorted(obj)
        for line in obj["lines"]:
            for point in (line["start"], line["end"]):
                for value in point.values():
                    assert round(value, 3) == value

    def test_deterministic_output(self, runner, table_file):
        first = runner.invoke(main, ["layout", str(table_file)])
        second = runner.invoke(main, ["layout", str(table_file)])
        assert first.output == second.output


class TestEvalCmd:
    def test_writes_complete_table(self, runner, csv_file, tmp_path):
        out = tmp_path / "scores.json"
        result = runner.invoke(main, [
            "eval", "--dataset", str(csv_file), "--label", "label",
            "--k", "3", "--folds", "3", "-o", str(out),
        ])
        assert result.exit_code == 0, result.output
        table, meta = parse_model_table(out.read_text())
        assert len(table) == 7
        assert "knn" in meta["algorithm"]

    def test_six_feature_demo_dataset_yields_63_models(self, runner, tmp_path):
        csv_path = tmp_path / "six.csv"
        csv_path.write_text(dataset_to_csv(make_separable_dataset(n_features=6)))
        out = tmp_path / "scores.json"
        result = runner.invoke(main, [
            "eval", "--dataset", str(csv_path), "--label", "label", "-o", str(out),
        ])
        assert result.exit_code == 0, result.output
        table, _ = parse_model_table(out.read_text())
        assert len(table) == 63

    def test_single_fold_is_usage_error(self, runner, csv_file, tmp_path):
        result = runner.invoke(main, [
            "eval", "--dataset", str(csv_file), "--label", "label",
            "--folds", "1", "-o", str(tmp_path / "x.json"),
        ])
        assert result.exit_code == 2

    def test_fixed_seed_reproduces_file(self, runner, csv_file, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for out in (a, b):
            assert runner.invoke(main, [
                "eval", "--dataset", str(csv_file), "--label", "label",
                "--k", "3", "--folds", "3", "--seed", "7", "-o", str(out),
            ]).exit_code == 0
        assert a.read_bytes() == b.read_bytes()


class TestDemoCmd:
    def test_writes_table_and_csv(self, runner, tmp_path):
        result = runner.invoke(main, ["demo", "-d", str(tmp_path)])
        assert result.exit_code == 0
        table, _ = parse_model_table((tmp_path / "demo_table_6f.json").read_text())
        assert len(table) == 63
        assert (tmp_path / "demo_dataset_6f.csv").exists()
