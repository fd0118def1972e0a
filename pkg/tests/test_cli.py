"""Command line surface: exit codes, file formats, and determinism."""

import contextlib
import io
import json
import os
import subprocess
import sys

import pytest

from gvdc.cli import main


def run_cli(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue()


def test_unknown_subcommand_is_usage_error():
    code, _ = run_cli(["frobnicate"])
    assert code == 1


def test_missing_required_argument_is_usage_error():
    code, _ = run_cli(["factor"])
    assert code == 1


def test_factor_output():
    code, out = run_cli(["factor", "--n", "9"])
    assert code == 0
    assert "0x49" in out and "0x3" in out and "0x7" in out


def test_primes_scan():
    code, out = run_cli(["primes", "--from", "2744", "--count", "1"])
    assert code == 0
    data = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert data[0] == "p,order_of_2,primitive,wieferich_ok,kasami"
    assert data[1] == "2789,2788,true,true,true"


def test_thresholds_row():
    code, out = run_cli(["thresholds", "--n", "13"])
    assert code == 0
    assert "13,4,4,4" in out


def test_thresholds_range_and_const_override():
    code, out = run_cli(["thresholds", "--from", "12", "--to", "14"])
    assert code == 0
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert len(rows) == 1 + 3  # header + three lengths

    code, _ = run_cli(["thresholds", "--n", "13",
                       "--const", "ball_fraction=0.1"])
    assert code == 0
    code, _ = run_cli(["thresholds", "--n", "13", "--const", "nope=1"])
    assert code == 1


def test_sample_matches_experiment_seeding():
    from gvdc.codes import dc_sample
    from gvdc.verify import trial_seed

    code, out = run_cli(["sample", "--n", "16", "--count", "3", "--seed", "5"])
    assert code == 0
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert len(rows) == 3
    for i, row in enumerate(rows):
        assert row == dc_sample(16, trial_seed(5, i)).serialize()


def test_mindist_exact_and_witness():
    code, out = run_cli(["mindist", "--n", "3", "--a", "110"])
    assert code == 0
    assert out.strip() == "d=3 witness=6:0x25"


def test_mindist_json_and_budget():
    code, out = run_cli(["mindist", "--n", "3", "--a", "110", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["d"] == 3 and doc["exact"] is True

    code, _ = run_cli(["mindist", "--n", "29", "--a", "0x1", "--exact"])
    assert code == 3  # enumeration budget


def test_spectrum_outputs():
    code, out = run_cli(["spectrum", "--n", "3", "--g", "11"])
    assert code == 0
    rows = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert rows[0] == "i,A_i"
    assert rows[1:] == ["0,1", "1,0", "2,3", "3,0"]

    code2, out2 = run_cli(["spectrum", "--n", "3", "--a", "111"])
    assert code2 == 0
    # --a and --g are exclusive
    code3, _ = run_cli(["spectrum", "--n", "3", "--a", "111", "--g", "11"])
    assert code3 == 1


def test_expected_agreement_gate():
    code, out = run_cli(["expected", "--n", "9", "--w", "4", "--bruteforce"])
    assert code == 0
    assert "2571/256" in out

    code, out = run_cli(["expected", "--n", "9", "--w", "4", "--orbit"])
    assert code == 0
    assert "307/256" in out


def test_verify_cx_table_and_exit():
    code, out = run_cli(["verify", "cx"])
    assert code == 0
    assert "membership-uniformity" in out
    assert "verified-exact" in out


def test_verify_json_omits_runtimes(tmp_path):
    out_path = tmp_path / "report.json"
    code, _ = run_cli(["verify", "kappa", "--json", str(out_path)])
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["violated"] is False
    assert doc["reports"] and doc["reports"][0]["lemma"]
    assert "runtime" not in json.dumps(doc)
    manifest = json.loads((tmp_path / "report.json.manifest.json").read_text())
    assert "report.json" in manifest["outputs"]


def test_experiment_csv_and_summary(tmp_path):
    out_csv = tmp_path / "runs.csv"
    summary_path = tmp_path / "summary.json"
    code, out = run_cli([
        "experiment", "--n", "11", "--trials", "8", "--seed", "3",
        "--out", str(out_csv), "--summary", str(summary_path),
    ])
    assert code == 0
    summary = json.loads(summary_path.read_text())
    assert summary["completed"] == 8
    printed = json.loads(out)
    assert printed == summary

    text = out_csv.read_text()
    lines = text.splitlines()
    assert lines[0].startswith("# config:")
    assert lines[1].startswith("# manifest:")
    assert lines[2] == ("n,trial,seed,a,d_found,exact,gv_guarantee,"
                        "threshold_kind,threshold")
    assert len(lines) == 3 + 8
    assert not list(tmp_path.glob("*.tmp"))


def test_experiment_flags_override_config(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("n = 11\ntrials = 4\nseed = 3\n")
    code, out = run_cli(["experiment", "--config", str(cfg), "--trials", "2"])
    assert code == 0
    assert json.loads(out)["completed"] == 2


def test_experiment_config_sections_and_unknown_keys(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("n = 11\ntrials = 2\n[const]\nball_fraction = 0.2\n")
    code, out = run_cli(["experiment", "--config", str(cfg)])
    assert code == 0

    cfg.write_text("n = 11\nbogus = 1\n")
    code, _ = run_cli(["experiment", "--config", str(cfg)])
    assert code == 1


def test_experiment_worker_count_leaves_no_trace(tmp_path):
    a_dir = tmp_path / "a"
    b_dir = tmp_path / "b"
    a_dir.mkdir()
    b_dir.mkdir()
    argv = ["experiment", "--n", "11", "--trials", "10", "--seed", "1",
            "--out", "runs.csv", "--summary", "summary.json"]
    here = os.getcwd()
    try:
        os.chdir(a_dir)
        run_cli(argv + ["--workers", "1"])
        os.chdir(b_dir)
        run_cli(argv + ["--workers", "3"])
    finally:
        os.chdir(here)
    assert (a_dir / "runs.csv").read_bytes() == \
        (b_dir / "runs.csv").read_bytes()
    assert (a_dir / "summary.json").read_bytes() == \
        (b_dir / "summary.json").read_bytes()


def test_experiment_budget_exit(tmp_path):
    out_csv = tmp_path / "runs.csv"
    code, out = run_cli([
        "experiment", "--n", "25", "--trials", "100000", "--seed", "0",
        "--max-seconds", "0.5", "--out", str(out_csv),
    ])
    assert code == 3
    assert json.loads(out)["truncated"] is True
    assert out_csv.exists()  # partial results still land


def test_plot_histogram_and_overlay(tmp_path):
    out_csv = tmp_path / "runs.csv"
    run_cli(["experiment", "--n", "13", "--trials", "12", "--seed", "0",
             "--out", str(out_csv)])
    for kind in ("histogram", "threshold-overlay"):
        svg_path = tmp_path / f"{kind}.svg"
        code, _ = run_cli(["plot", "--records", str(out_csv),
                           "--kind", kind, "--out", str(svg_path)])
        assert code == 0
        text = svg_path.read_text()
        assert text.startswith("<?xml")
        assert "<svg" in text and "</svg>" in text


def test_plot_rejects_foreign_csv(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("x,y\n1,2\n")
    code, _ = run_cli(["plot", "--records", str(bad), "--kind", "histogram",
                       "--out", str(tmp_path / "o.svg")])
    assert code == 1


def test_plot_empty_records_draws_placeholder(tmp_path):
    out_csv = tmp_path / "runs.csv"
    run_cli(["experiment", "--n", "11", "--trials", "0",
             "--out", str(out_csv)])
    svg_path = tmp_path / "empty.svg"
    code, _ = run_cli(["plot", "--records", str(out_csv),
                       "--kind", "histogram", "--out", str(svg_path)])
    assert code == 0
    assert "no data" in svg_path.read_text()


def test_audit_constants_exits_clean():
    code, out = run_cli(["audit-constants"])
    assert code == 0
    assert "class_sum_cap" in out or "4.3" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gvdc", "thresholds", "--n", "13"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "13,4,4,4" in proc.stdout


def test_gvdc_workers_env(tmp_path, monkeypatch):
    monkeypatch.setenv("GVDC_WORKERS", "2")
    out_csv = tmp_path / "runs.csv"
    code, _ = run_cli(["experiment", "--n", "11", "--trials", "6",
                       "--seed", "8", "--out", str(out_csv)])
    assert code == 0
    body = out_csv.read_text()
    assert "workers" not in body  # execution knobs stay out of the echo
