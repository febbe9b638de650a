"""End-to-end command-line checks through main(argv)."""

import csv
import io
import json
import math

import pytest

from mirrorhull.cli import main


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_ratio_u0_report(capsys):
    code, payload = run_json(capsys, ["ratio", "--n", "4", "--u0"])
    assert code == 0
    assert payload["schema_version"] == "1"
    assert payload["tool"]["name"] == "mirrorhull"
    assert payload["tool"]["backend"] in ("native", "fallback")
    assert payload["config"]["n"] == 4
    res = payload["result"]
    assert abs(res["ratio"] - 8.0) < 1e-12
    assert res["k"] == 1
    assert abs(res["x"] - 1.0) < 1e-12
    assert res["touching"] == [0]
    assert payload["constants"]["ratio_at_u0"]["expr"] == "2*4"
    assert payload["constants"]["ratio_at_u0"]["value"] == 8.0


def test_ratio_output_is_newline_terminated(capsys):
    main(["ratio", "--n", "3", "--u0"])
    out = capsys.readouterr().out
    assert out.endswith("}\n")


def test_ratio_explicit_coordinates(capsys):
    code, payload = run_json(capsys, ["ratio", "--n", "3", "--coords", "0.2,-0.4,0.9"])
    assert code == 0
    res = payload["result"]
    assert res["ratio"] > 0
    assert 1 <= res["k"] <= 3
    assert len(res["u"]) == 3
    assert abs(sum(c * c for c in res["u"]) - 1.0) < 1e-12


def test_ratio_r_family_and_ambient_dump(capsys):
    code, payload = run_json(capsys, ["ratio", "--n", "5", "--r-family", "2", "--dump-ambient"])
    assert code == 0
    res = payload["result"]
    assert abs(res["ratio"] - 6.0) < 1e-9
    assert res["k"] == 3
    assert res["touching"] == [0, 1, 2]
    ambient = res["ambient_vertices"]
    assert len(ambient) == 6 and len(ambient[0]) == 6


def test_ratio_rejects_wrong_coordinate_count(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ratio", "--n", "3", "--coords", "1,0"])
    assert exc.value.code == 2


def test_ratio_rejects_bad_dimension(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["ratio", "--n", "9", "--u0"])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["summarize"])
    assert exc.value.code == 2


def test_optimize_files_and_status(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    trace_path = tmp_path / "trace.csv"
    code = main(
        [
            "optimize",
            "--n",
            "3",
            "--restarts",
            "60",
            "--seed",
            "5",
            "--output",
            str(out_path),
            "--trace",
            str(trace_path),
        ]
    )
    assert code == 0
    payload = json.loads(out_path.read_text())
    res = payload["result"]
    assert abs(res["best_ratio"] - 6.0) < 1e-9
    assert abs(res["oracle_ratio"] - res["best_ratio"]) < 1e-8
    assert res["status"] == "verified range"
    assert res["seed"] == 5
    labels = [row["label"] for row in res["candidate_table"]]
    assert labels[0] == "u0"

    lines = trace_path.read_text().strip().splitlines()
    assert lines[0] == "iteration,ratio"
    assert len(lines) > 2
    values = [float(line.split(",")[1]) for line in lines[1:]]
    assert abs(values[-1] - res["best_ratio"]) < 1e-12


def test_optimize_conjecture_status(capsys):
    code, payload = run_json(capsys, ["optimize", "--n", "6", "--restarts", "40", "--seed", "2"])
    assert code == 0
    res = payload["result"]
    assert res["status"] == "conjecture (open problem)"
    assert res["best_ratio"] >= 12 - 1e-9


def test_optimize_stdout_is_reproducible(capsys):
    main(["optimize", "--n", "3", "--restarts", "50", "--seed", "13"])
    first = capsys.readouterr().out
    main(["optimize", "--n", "3", "--restarts", "50", "--seed", "13"])
    second = capsys.readouterr().out
    assert first == second


def test_verify_reports_and_exit_code(tmp_path, capsys):
    out_path = tmp_path / "verify.json"
    code = main(["verify", "--output", str(out_path)])
    out = capsys.readouterr().out
    # The three recorded (5,3) constants disagree with their defining
    # relations, so verify flags them and signals failure on purpose.
    assert code == 1
    assert "FAIL  recorded constant (5,3) B" in out
    assert "FAIL  recorded constant (5,3) x1^2" in out
    assert "FAIL  recorded constant (5,3) x2^2" in out
    assert "NOTE" in out
    assert "20/23 checks passed" in out
    assert sum(line.startswith("PASS") for line in out.splitlines()) == 20

    payload = json.loads(out_path.read_text())
    assert payload["result"]["failures"] == 3
    statuses = {item["name"]: item["status"] for item in payload["result"]["items"]}
    assert statuses["formula ratio at u0 equals 2n, n=2..8"] == "PASS"
    assert statuses["recorded constant (5,3) B"] == "FAIL"


def test_sweep_r_family_csv(capsys):
    code = main(["sweep", "--n", "4", "--family", "r"])
    assert code == 0
    out = capsys.readouterr().out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["param", "ratio", "k_upper", "x"]
    assert len(rows) == 5
    ratios = [float(r[1]) for r in rows[1:]]
    assert all(abs(v - 2 * (4 - r)) < 1e-9 for r, v in enumerate(ratios))


def test_sweep_phi_family_csv(capsys):
    code = main(["sweep", "--n", "5", "--family", "phi", "--points", "50"])
    assert code == 0
    out = capsys.readouterr().out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["param", "ratio", "k_upper", "x"]
    assert len(rows) == 51
    assert float(rows[1][0]) == 0.0
    assert abs(float(rows[1][1]) - 8.0) < 1e-9
    assert abs(float(rows[-1][0]) - math.pi / 2) < 1e-12


def test_sweep_phi_requires_dimension_five(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--n", "4", "--family", "phi"])
    assert exc.value.code == 2


def test_analyze_case_text_table(capsys):
    code = main(["analyze-case"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split() == ["n", "k", "A", "B", "feasible", "x1^2", "x2^2"]
    assert len(lines) == 1 + 28  # all pairs 2 <= k <= n <= 8


def test_analyze_case_json(capsys):
    code, payload = run_json(capsys, ["analyze-case", "--format", "json"])
    assert code == 0
    records = payload["result"]["records"]
    assert len(records) == 28
    by_pair = {(rec["n"], rec["k"]): rec for rec in records}
    assert by_pair[(4, 2)]["feasible"]
    assert abs(by_pair[(4, 2)]["real_roots"][0] - 20 / 23) < 1e-12
    assert not by_pair[(3, 2)]["feasible"]


def test_construct_5d_report(capsys):
    code, payload = run_json(capsys, ["construct-5d"])
    assert code == 0
    res = payload["result"]
    target_vol = (5 * math.sqrt(3) + math.sqrt(77)) / 480
    assert abs(res["hull_volume"] - target_vol) < 1e-10
    assert abs(res["ratio"] - (5 + math.sqrt(77 / 3))) < 1e-9
    assert len(res["optimal_vertices"]) == 11
    assert len(res["base_vertices"]) == 6
    assert abs(res["decomposition"]["total"] - res["hull_volume"]) < 1e-10
    assert abs(res["a"] + res["b"] - 2.0) < 1e-12
    assert payload["constants"]["max_ratio"]["value"] == pytest.approx(10.0662280511902, abs=1e-10)
