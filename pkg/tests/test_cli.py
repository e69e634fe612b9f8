"""CLI surface: round trips, exit codes, machine-readable outputs."""

import json
import subprocess
import sys

from pqpierce.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_PREMISE,
    document_to_family,
    dump_family,
    family_to_document,
    main,
)
from pqpierce.generators import GeneratorSpec, extremal_dim1, random_family


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out = capsys.readouterr().out if capsys else ""
    return code, out


class TestDocumentRoundTrip:
    def test_intervals_exact(self):
        F = random_family(GeneratorSpec("random_intervals", n=7, seed=3))
        assert document_to_family(family_to_document(F)) == F

    def test_polygons_exact(self):
        F = random_family(GeneratorSpec("random_polygons", n=6, seed=9))
        doc = json.loads(dump_family(F))
        assert document_to_family(doc) == F

    def test_rationals_as_strings(self):
        F = extremal_dim1(4, 0)
        doc = family_to_document(F)
        assert doc["bodies"][0] == {"type": "interval", "lo": "1", "hi": "1"}
        assert doc["format_version"] == "1"

    def test_unknown_format_version(self, tmp_path, capsys):
        path = tmp_path / "v9.json"
        path.write_text(
            json.dumps({"format_version": "9", "dimension": 1,
                        "bodies": [{"type": "interval", "lo": "0", "hi": "1"}]})
        )
        code, out = run_cli("analyze", str(path), "--p", "1", "--q", "1", capsys=capsys)
        assert code == EXIT_INPUT
        assert "format_version" in json.loads(out)["error"]["message"]

    def test_malformed_rational_names_body(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(
                {
                    "format_version": "1",
                    "dimension": 1,
                    "bodies": [
                        {"type": "interval", "lo": "0", "hi": "1"},
                        {"type": "interval", "lo": "1/0", "hi": "2"},
                    ],
                }
            )
        )
        code, out = run_cli("analyze", str(path), "--p", "1", "--q", "1", capsys=capsys)
        assert code == EXIT_INPUT
        payload = json.loads(out)
        assert "body 1" in payload["error"]["message"]


class TestBoundsCommand:
    def test_thm3_anchor(self, capsys):
        code, out = run_cli(
            "bounds", "thm3", "--p", "6", "--q", "3", "--d", "2", "--k", "0", capsys=capsys
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["threshold_r"] == "16" and payload["pierce_bound"] == 2

    def test_thm1_anchor(self, capsys):
        code, out = run_cli("bounds", "thm1", "--p", "6", "--q", "3", "--d", "2", capsys=capsys)
        payload = json.loads(out)
        assert code == EXIT_OK and payload["threshold_r"] == "11"

    def test_kalai_value(self, capsys):
        code, out = run_cli(
            "bounds", "kalai", "--p", "6", "--q", "3", "--s", "2", "--d", "2", capsys=capsys
        )
        assert code == EXIT_OK and json.loads(out) == {"value": "16"}

    def test_invalid_params_exit_2(self, capsys):
        code, out = run_cli("bounds", "thm1", "--p", "2", "--q", "3", "--d", "2", capsys=capsys)
        assert code == EXIT_INPUT
        assert "error" in json.loads(out)

    def test_big_integers_decimal(self, capsys):
        code, out = run_cli(
            "bounds", "thm2", "--p", "60", "--q", "30", "--d", "2",
            "--epsilon", "1/2", capsys=capsys,
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["threshold_r"].isdigit()
        assert int(payload["threshold_r"]) > 10**9  # far beyond float-safe range


class TestAnalyzeCommand:
    def test_extremal_file(self, tmp_path, capsys):
        path = tmp_path / "fam.json"
        path.write_text(dump_family(extremal_dim1(6, 1)))
        code, out = run_cli("analyze", str(path), "--p", "6", "--q", "3", capsys=capsys)
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["max_r"] == "10"
        assert payload["degeneracy_level"] == 2

    def test_single_body(self, tmp_path, capsys):
        path = tmp_path / "one.json"
        path.write_text(dump_family(extremal_dim1(2, 0)))
        code, out = run_cli("analyze", str(path), "--p", "1", "--q", "1", capsys=capsys)
        assert code == EXIT_OK and json.loads(out)["max_r"] == "1"

    def test_arity_exit_2(self, tmp_path, capsys):
        path = tmp_path / "fam.json"
        path.write_text(dump_family(extremal_dim1(4, 0)))
        code, _ = run_cli("analyze", str(path), "--p", "9", "--q", "3", capsys=capsys)
        assert code == EXIT_INPUT


class TestPierceCommand:
    def test_exact(self, tmp_path, capsys):
        path = tmp_path / "fam.json"
        path.write_text(dump_family(extremal_dim1(5, 1)))
        code, out = run_cli("pierce", str(path), "--strategy", "exact", capsys=capsys)
        payload = json.loads(out)
        assert code == EXIT_OK and payload["certified"] and payload["size"] == 3

    def test_hd_1d_example(self, tmp_path, capsys):
        doc = {
            "format_version": "1",
            "dimension": 1,
            "bodies": [
                {"type": "interval", "lo": "0", "hi": "1"},
                {"type": "interval", "lo": "1/2", "hi": "2"},
                {"type": "interval", "lo": "3", "hi": "4"},
            ],
        }
        path = tmp_path / "fam.json"
        path.write_text(json.dumps(doc))
        code, out = run_cli(
            "pierce", str(path), "--strategy", "hd", "--p", "3", "--q", "2", capsys=capsys
        )
        payload = json.loads(out)
        assert code == EXIT_OK and payload["points"] == ["1", "4"]

    def test_premise_violation_exit_3(self, tmp_path, capsys):
        path = tmp_path / "fam.json"
        path.write_text(dump_family(random_family(GeneratorSpec("random_polygons", n=4, seed=2))))
        code, out = run_cli(
            "pierce", str(path), "--strategy", "line", "--p", "4", "--k", "0",
            "--line", "0,1,1000", capsys=capsys,
        )
        assert code == EXIT_PREMISE
        assert json.loads(out)["error"]["type"] == "PremiseViolationError"


class TestGenerateCommand:
    def test_extremal_document(self, capsys):
        code, out = run_cli("generate", "extremal-dim1", "--p", "4", "--k", "0", capsys=capsys)
        payload = json.loads(out)
        assert code == EXIT_OK and len(payload["bodies"]) == 4
        assert payload["metadata"]["kind"] == "extremal_dim1"

    def test_byte_identical(self, capsys):
        _, first = run_cli("generate", "random-polygons", "--n", "5", "--seed", "7", capsys=capsys)
        _, second = run_cli("generate", "random-polygons", "--n", "5", "--seed", "7", capsys=capsys)
        assert first == second

    def test_round_trip_through_analyze(self, tmp_path, capsys):
        code, out = run_cli(
            "generate", "disjoint-plus-container", "--a", "2", "--b", "4",
            "--dimension", "2", capsys=capsys,
        )
        assert code == EXIT_OK
        path = tmp_path / "f.json"
        path.write_text(out)
        code, out = run_cli("analyze", str(path), "--p", "6", "--q", "2", capsys=capsys)
        assert code == EXIT_OK and json.loads(out)["max_r"] == "14"

    def test_spec_json(self, capsys):
        code, out = run_cli(
            "generate", "--spec-json",
            '{"kind": "random_intervals", "n": 4, "seed": 11}', capsys=capsys,
        )
        assert code == EXIT_OK and len(json.loads(out)["bodies"]) == 4

    def test_invalid_spec_exit_2(self, capsys):
        code, _ = run_cli("generate", "extremal-dim1", "--p", "2", "--k", "3", capsys=capsys)
        assert code == EXIT_INPUT


class TestExperimentCommand:
    def test_prop_dim1_grid(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"theorem": "prop-dim1", "grid": {"p": [5, 6]}}))
        out_path = tmp_path / "rows.csv"
        code, _ = run_cli("experiment", str(config), "--output", str(out_path), capsys=capsys)
        assert code == EXIT_OK
        lines = out_path.read_text().strip().splitlines()
        header = lines[0].split(",")
        assert header == [
            "seed", "n", "p", "q", "r_threshold", "max_r",
            "pierce_bound_claimed", "pierce_actual", "theorem_tag", "status",
        ]
        assert len(lines) > 5
        # extremal rows sit exactly one below the threshold and need k+2
        for line in lines[1:]:
            row = dict(zip(header, line.split(",")))
            assert int(row["max_r"]) == int(row["r_threshold"]) - 1
            assert int(row["pierce_actual"]) == int(row["pierce_bound_claimed"])
        assert (tmp_path / "rows.csv.config.json").exists()

    def test_thm5_dim1_grid(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(
            json.dumps({"theorem": "thm5", "dimension": 1, "n": 6, "seeds": 5,
                        "grid": {"p": [3, 4]}})
        )
        out_path = tmp_path / "rows.csv"
        code, _ = run_cli("experiment", str(config), "--output", str(out_path), capsys=capsys)
        assert code == EXIT_OK
        lines = out_path.read_text().strip().splitlines()
        header = lines[0].split(",")
        for line in lines[1:]:
            row = dict(zip(header, line.split(",")))
            if row["status"] == "ok" and int(row["max_r"]) >= int(row["r_threshold"]):
                assert int(row["pierce_actual"]) <= int(row["pierce_bound_claimed"])

    def test_kalai_grid(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"theorem": "kalai", "dimension": 1, "n": 6, "seeds": 10}))
        code, out = run_cli("experiment", str(config), capsys=capsys)
        assert code == EXIT_OK
        lines = [line for line in out.splitlines() if line]
        assert len(lines) > 10

    def test_unknown_theorem_exit_2(self, tmp_path, capsys):
        config = tmp_path / "config.json"
        config.write_text(json.dumps({"theorem": "nope"}))
        code, _ = run_cli("experiment", str(config), capsys=capsys)
        assert code == EXIT_INPUT


class TestConsoleEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "pqpierce.cli", "bounds", "thm1",
             "--p", "6", "--q", "3", "--d", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["threshold_r"] == "11"
