"""Command line surface: files written, JSON shape, exit codes."""

import csv
import json
import subprocess
import sys

import pytest

import greycog as gc
from greycog.cli import main


def export(tmp_path, variant):
    path = tmp_path / f"{variant}.json"
    assert main(["corpus", variant, "--out", str(path)]) == 0
    return str(path)


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


def test_corpus_export_parses_back(tmp_path):
    path = export(tmp_path, "web_fggcm")
    assert gc.load_model(path) == gc.build("web_fggcm", 1.0)


def test_corpus_unknown_variant_is_usage_error(tmp_path, capsys):
    rc = main(["corpus", "web_nope", "--out", str(tmp_path / "x.json")])
    assert rc == 2
    assert "web_fcm" in capsys.readouterr().err


def test_simulate_writes_trajectory(tmp_path):
    model = export(tmp_path, "web_fcm")
    out = tmp_path / "traj.csv"
    rc = main(["simulate", "--model", model, "--lambda", "0.5",
               "--steps", "10", "--out", str(out)])
    assert rc == 0
    rows = read_csv(out)
    assert rows[0] == ["t", "node", "field", "value"]
    assert len(rows) == 1 + 11 * 7          # header + (steps+1) * nodes
    assert rows[1][:3] == ["0", "C1", "value"]
    assert float(rows[1][3]) == 1.0
    assert {r[2] for r in rows[1:]} == {"value"}


def test_simulate_ggn_has_two_fields_per_node(tmp_path):
    model = export(tmp_path, "web_fggcm")
    out = tmp_path / "traj.csv"
    assert main(["simulate", "--model", model, "--steps", "5", "--out", str(out)]) == 0
    rows = read_csv(out)
    assert len(rows) == 1 + 6 * 7 * 2
    assert {r[2] for r in rows[1:]} == {"kernel", "greyness"}
    # Values round-trip as exact doubles.
    assert all(repr(float(r[3])) == r[3] for r in rows[1:])


def test_simulate_rejects_bad_steps(tmp_path):
    model = export(tmp_path, "web_fcm")
    rc = main(["simulate", "--model", model, "--steps", "0",
               "--out", str(tmp_path / "t.csv")])
    assert rc == 2


def test_simulate_missing_model_file(tmp_path, capsys):
    rc = main(["simulate", "--model", str(tmp_path / "no.json"),
               "--out", str(tmp_path / "t.csv")])
    assert rc == 2
    assert "parse error" in capsys.readouterr().err


def test_check_crisp_report(tmp_path, capsys):
    model = export(tmp_path, "web_fcm")
    rc = main(["check", "--model", model, "--lambda", "0.5"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["family"] == "fcm"
    assert report["lambda"] == 0.5
    assert report["criterion_display"] == "3.0680"
    assert report["threshold"] == 4.0
    assert report["outcome"] == gc.UNIQUE
    assert report["classification"]["verdict"] == "FixedPoint"
    assert report["classification"]["t_alpha"] == 26


def test_check_ggn_report(tmp_path, capsys):
    model = export(tmp_path, "web_fggcm")
    rc = main(["check", "--model", model, "--lambda", "0.5"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kernel"]["criterion_display"] == "3.0586"
    assert report["kernel"]["outcome"] == gc.UNIQUE
    assert report["greyness"]["criterion_display"] == "0.1087"
    assert report["greyness"]["threshold"] == 1.0
    assert report["overall"] == gc.UNIQUE
    assert report["evaluation_state"]["kernel_converged"] is True
    assert len(report["evaluation_state"]["kernels"]) == 7


def test_check_mixed_sign_weight_exits_four(tmp_path, capsys):
    doc = {
        "family": "fgcm",
        "nodes": ["a"],
        "weights": [[{"interval": [-0.2, 0.3]}]],
        "initial": [0.5],
        "lambda": 1.0,
    }
    path = tmp_path / "straddle.json"
    path.write_text(json.dumps(doc))
    rc = main(["check", "--model", str(path)])
    assert rc == 4
    err = json.loads(capsys.readouterr().out)
    assert err["error"] == "MixedSignWeight"
    assert (err["i"], err["j"]) == (1, 1)
    assert "fggcm" in err["hint"]


def test_check_too_few_steps_for_period_cap(tmp_path, capsys):
    model = export(tmp_path, "web_fcm")
    rc = main(["check", "--model", model, "--steps", "10"])
    assert rc == 3


def test_check_rejects_bad_eps(tmp_path):
    model = export(tmp_path, "web_fcm")
    assert main(["check", "--model", model, "--eps", "0"]) == 2
    assert main(["check", "--model", model, "--max-period", "1"]) == 2


def test_sweep_writes_summary_and_per_run_files(tmp_path):
    model = export(tmp_path, "web_fggcm")
    out = tmp_path / "sweep"
    rc = main(["sweep", "--model", model, "--lambdas", "0.5,1",
               "--out-dir", str(out)])
    assert rc == 0
    rows = read_csv(out / "summary.csv")
    assert rows[0] == ["lambda", "criterion_kernel", "criterion_greyness",
                       "classification", "period"]
    assert [r[0] for r in rows[1:]] == ["0.5", "1"]
    assert all(r[3] == "FixedPoint" for r in rows[1:])
    assert float(rows[1][2]) == pytest.approx(0.10869501353122366, abs=1e-12)
    for tag in ("0.5", "1"):
        assert (out / f"trajectory_lam{tag}.csv").exists()
        report = json.loads((out / f"report_lam{tag}.json").read_text())
        assert report["lambda"] == float(tag)


def test_sweep_crisp_leaves_greyness_column_empty(tmp_path):
    model = export(tmp_path, "web_fcm")
    out = tmp_path / "sweep"
    assert main(["sweep", "--model", model, "--lambdas", "4",
                 "--out-dir", str(out)]) == 0
    rows = read_csv(out / "summary.csv")
    assert rows[1][2] == ""
    assert rows[1][3] == "LimitCycle" and rows[1][4] == "2"


def test_sweep_rejects_malformed_lambda_list(tmp_path):
    model = export(tmp_path, "web_fcm")
    out = str(tmp_path / "s")
    assert main(["sweep", "--model", model, "--lambdas", "0.5,abc",
                 "--out-dir", out]) == 2
    assert main(["sweep", "--model", model, "--lambdas", "-1",
                 "--out-dir", out]) == 2
    assert main(["sweep", "--model", model, "--lambdas", ",",
                 "--out-dir", out]) == 2


def test_sweep_records_inapplicable_lambda_and_exits_four(tmp_path):
    doc = {
        "family": "fgcm",
        "nodes": ["a"],
        "weights": [[{"interval": [-0.2, 0.3]}]],
        "initial": [0.5],
        "lambda": 1.0,
    }
    path = tmp_path / "straddle.json"
    path.write_text(json.dumps(doc))
    out = tmp_path / "sweep"
    rc = main(["sweep", "--model", str(path), "--lambdas", "1",
               "--out-dir", str(out)])
    assert rc == 4
    rows = read_csv(out / "summary.csv")
    assert rows[1][3] == "error(MixedSignWeight 1,1)"


def test_check_output_is_deterministic(tmp_path, capsys):
    model = export(tmp_path, "web_fggcm")
    main(["check", "--model", model, "--lambda", "0.5"])
    first = capsys.readouterr().out
    main(["check", "--model", model, "--lambda", "0.5"])
    assert capsys.readouterr().out == first


def test_module_entry_point(tmp_path):
    out = tmp_path / "m.json"
    proc = subprocess.run(
        [sys.executable, "-m", "greycog", "corpus", "web_fcm", "--out", str(out)],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert out.exists()
