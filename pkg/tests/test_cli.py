import csv
import io
import json

import pytest

from asympure.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_bott_table(self, capsys):
        code, out, _ = run(capsys, "bott", "--n", "2", "--d", "-4")
        assert code == 0
        assert "h^2 = 3" in out

    def test_product_json(self, capsys):
        code, out, _ = run(capsys, "product", "--n", "2", "--a1", "2", "--a2", "-4",
                           "--format", "json")
        assert code == 0
        envelope = json.loads(out)
        assert envelope["result"]["values"] == ["0", "0", "18", "0", "0"]
        assert envelope["result"]["euler"] == "18"

    def test_product_negative_pair(self, capsys):
        code, out, _ = run(capsys, "product", "--n", "1", "--a1", "-2", "--a2", "-2",
                           "--format", "json")
        assert json.loads(out)["result"]["values"] == ["0", "0", "1"]

    def test_decompose(self, capsys):
        code, out, _ = run(capsys, "decompose", "--n", "2", "--A", "9", "--B", "3",
                           "--format", "json")
        result = json.loads(out)["result"]
        assert result["total_dim"] == "550"
        assert len(result["components"]) == 4

    def test_predict(self, capsys):
        code, out, _ = run(capsys, "predict", "--n", "2", "--k", "1", "--A", "9",
                           "--B", "3", "--format", "json")
        result = json.loads(out)["result"]
        assert result["kernel_dim"] == "154"
        assert result["cokernel_dim"] == "0"

    def test_oracle_special(self, capsys):
        code, out, _ = run(capsys, "oracle", "--n", "2", "--k", "1", "--A", "9",
                           "--B", "3", "--format", "json")
        result = json.loads(out)["result"]
        assert result["rank"] == "396"
        assert result["certified"] is True

    def test_oracle_operator_file(self, capsys, tmp_path):
        # the one-term corner operator: kernel 12 at multiple 3
        path = tmp_path / "corner.json"
        path.write_text(json.dumps(
            {"n": 2, "k": 1,
             "terms": [{"coeff": 1, "alpha": [1, 0, 0], "beta": [1, 0, 0]}]}
        ))
        code, out, _ = run(capsys, "oracle", "--n", "2", "--k", "1", "--A", "2",
                           "--B", "1", "--operator-file", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["result"]["kernel_dim"] == "12"

    def test_series_rep(self, capsys):
        code, out, _ = run(capsys, "series", "--n", "2", "--k", "1", "--a1", "2",
                           "--a2", "1", "--m", "5..7", "--engine", "rep",
                           "--format", "json")
        rows = json.loads(out)["result"]["rows"]
        assert rows[0] == {"m": "5", "kernel_dim": "154", "cokernel_dim": "0"}

    def test_series_oracle(self, capsys):
        code, out, _ = run(capsys, "series", "--n", "2", "--k", "1", "--a1", "1",
                           "--a2", "1", "--m", "3..4", "--engine", "oracle",
                           "--format", "json")
        rows = json.loads(out)["result"]["rows"]
        assert [r["kernel_dim"] for r in rows] == ["8", "15"]

    def test_asymptotics(self, capsys):
        code, out, _ = run(capsys, "asymptotics", "--n", "2", "--k", "1", "--a1", "2",
                           "--a2", "1", "--format", "json")
        result = json.loads(out)["result"]
        assert result["values"] == ["0", "6", "0", "0"]
        assert result["verdict"] == "pure(1)"

    def test_asymptotics_pure_zero(self, capsys):
        code, out, _ = run(capsys, "asymptotics", "--n", "2", "--k", "1", "--a1", "1",
                           "--a2", "1", "--format", "json")
        assert json.loads(out)["result"]["verdict"] == "pure_zero"


class TestScan:
    def test_csv_schema_and_verdicts(self, capsys, tmp_path):
        out_file = tmp_path / "grid.csv"
        code, out, _ = run(capsys, "scan", "--n", "2", "--k", "1", "--a1", "0..4",
                           "--a2", "0..4", "--out", str(out_file))
        assert code == 0
        rows = list(csv.reader(io.StringIO(out_file.read_text())))
        assert rows[0] == ["n", "k", "a1", "a2", "case",
                           "h_hat_0", "h_hat_1", "h_hat_2", "h_hat_3", "verdict"]
        assert len(rows) == 26  # header + 25 grid points
        for row in rows[1:]:
            assert row[-1].startswith(("pure(", "pure_zero"))

    def test_csv_to_stdout(self, capsys):
        code, out, _ = run(capsys, "scan", "--n", "2", "--k", "1", "--a1", "1..2",
                           "--a2", "1..2", "--format", "csv")
        lines = out.strip().splitlines()
        assert len(lines) == 5


class TestExitCodes:
    def test_usage_error_from_argparse(self):
        with pytest.raises(SystemExit) as err:
            main(["bott", "--n", "2"])  # missing --d
        assert err.value.code == 2

    def test_invalid_values_exit_2(self, capsys):
        code, _, err = run(capsys, "predict", "--n", "2", "--k", "1", "--A", "3", "--B", "0")
        assert code == 2
        assert "B" in err

    def test_size_cap_exit_3(self, capsys):
        code, _, err = run(capsys, "oracle", "--n", "2", "--k", "1", "--A", "200",
                           "--B", "200", "--size-cap", "1000")
        assert code == 3
        assert "cap" in err


class TestDeterminism:
    def test_identical_config_identical_bytes(self, capsys):
        argv = ["oracle", "--n", "2", "--k", "1", "--A", "5", "--B", "4",
                "--format", "json", "--seed", "11"]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second

    def test_seed_does_not_change_result_payload(self, capsys):
        base = ["oracle", "--n", "2", "--k", "1", "--A", "5", "--B", "4",
                "--format", "json"]
        _, a, _ = run(capsys, *base, "--seed", "1")
        _, b, _ = run(capsys, *base, "--seed", "2")
        assert json.loads(a)["result"] == json.loads(b)["result"]


class TestCache:
    def test_hit_equals_cold_output(self, capsys, tmp_path):
        cache = tmp_path / "cache.jsonl"
        argv = ["oracle", "--n", "2", "--k", "1", "--A", "6", "--B", "3",
                "--cache", str(cache), "--format", "json"]
        _, cold, _ = run(capsys, *argv)
        _, warm, _ = run(capsys, *argv)
        assert cold == warm
        assert cache.exists() and cache.read_text().count("\n") == 1

    def test_verify_clean_cache(self, capsys, tmp_path):
        cache = tmp_path / "cache.jsonl"
        run(capsys, "bott", "--n", "2", "--d", "-4", "--cache", str(cache))
        run(capsys, "predict", "--n", "2", "--k", "1", "--A", "9", "--B", "3",
            "--cache", str(cache))
        code, out, _ = run(capsys, "verify", "--suite", "small", "--cache", str(cache))
        assert code == 0
        assert "PASS - cache key bott:n=2,d=-4" in out

    def test_verify_tampered_cache_names_key(self, capsys, tmp_path):
        cache = tmp_path / "cache.jsonl"
        run(capsys, "predict", "--n", "2", "--k", "1", "--A", "9", "--B", "3",
            "--cache", str(cache))
        record = json.loads(cache.read_text())
        record["value"]["kernel_dim"] = "155"
        cache.write_text(json.dumps(record) + "\n")
        code, out, _ = run(capsys, "verify", "--suite", "small", "--cache", str(cache))
        assert code == 1
        assert "FAIL - cache key predict:n=2,k=1,A=9,B=3" in out


class TestVerify:
    def test_small_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "small")
        assert code == 0
        assert "all checks passed" in out
        assert out.count("PASS") >= 10
