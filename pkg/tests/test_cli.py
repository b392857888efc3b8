"""Command-line front end: determinism, exit codes, config layering."""

from __future__ import annotations

import json

import numpy as np
import pytest

from growthcomp.cli import main

# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def test_seq_analyze_report(capsys):
    code, out, err = run(capsys, "seq", "analyze", "gevrey:1", "--J", "64")
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["command"] == "seq analyze"
    states = {row["check"]: row["state"] for row in doc["results"]}
    assert states["mg"] == "Holds"
    assert states["strong_2j"] == "Fails"


def test_seq_compare_report(capsys):
    code, out, _ = run(capsys, "seq", "compare", "gevrey:1", "gevrey:2",
                       "--J", "64")
    assert code == 0
    doc = json.loads(out)
    states = {row["check"]: row["state"] for row in doc["results"]}
    assert states["bridge_triangle_ab"] == "Holds"
    assert states["bridge_triangle_ba"] == "Fails"


def test_weight_analyze_from_table(capsys, tmp_path):
    p = tmp_path / "w.csv"
    xs = np.linspace(0.0, 14.0, 30)
    p.write_text("# t, omega\n" + "\n".join(
        f"{t:.9g},{w:.9g}" for t, w in zip(np.exp(xs), np.exp(xs / 2.0))))
    code, out, _ = run(capsys, "weight", "analyze", f"file:{p}", "--J", "16")
    assert code == 0
    doc = json.loads(out)
    assert doc["inputs"]["label"] == "w"
    assert {row["check"] for row in doc["results"]} >= {"om6_weight",
                                                        "sandwich"}
    assert doc["associated_sequence"]["J"] == 16


def test_spaces_decide_report(capsys):
    code, out, _ = run(capsys, "spaces", "decide",
                       "--left", "InductiveDila:gevrey:2",
                       "--right", "ProjectiveDila:gevrey:1", "--J", "64")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["state"] == "Holds"
    assert doc["route"]
    assert "sides" in doc and "preconditions" in doc


def test_system_equiv_report(capsys):
    code, out, _ = run(capsys, "spaces", "system-equiv",
                       "--seq", "qgevrey:1.5", "--J", "64")
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["check"] == "system_equiv"
    assert doc["results"][0]["state"] == "Fails"


def test_theta_eval_report(capsys):
    code, out, _ = run(capsys, "theta", "eval", "gevrey:1",
                       "--t", "1,10,100")
    assert code == 0
    doc = json.loads(out)
    assert doc["inputs"]["certified_log_t"] > np.log(100.0)
    got = {row["t"]: row["log_value"] for row in doc["results"]}
    assert got[100.0] == pytest.approx(50.0, rel=1e-9)


def test_verify_exit_zero_on_pass(capsys):
    code, out, _ = run(capsys, "verify", "dual-routes", "--J", "64")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert doc["results"][0]["suite"] == "dual-routes"


# ---------------------------------------------------------------------------
# determinism and formats
# ---------------------------------------------------------------------------

def test_reports_are_byte_identical(capsys):
    argv = ("seq", "analyze", "gevrey:1", "--J", "64")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    argv_csv = argv + ("--format", "csv")
    _, c1, _ = run(capsys, *argv_csv)
    _, c2, _ = run(capsys, *argv_csv)
    assert c1 == c2


def test_csv_format_shape(capsys):
    code, out, _ = run(capsys, "seq", "analyze", "gevrey:1", "--J", "64",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    comments = [l for l in lines if l.startswith("# ")]
    assert any(l.startswith("# config:") for l in comments)
    header = next(l for l in lines if not l.startswith("#"))
    assert header == "check,state,witnesses,evidence,note"


# ---------------------------------------------------------------------------
# configuration layering
# ---------------------------------------------------------------------------

def test_config_file_feeds_the_run(capsys, tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"J": 64, "fmt": "csv"}))
    code, out, _ = run(capsys, "seq", "analyze", "gevrey:1",
                       "--config", str(p))
    assert code == 0
    assert '"J": 64' in out and out.splitlines()[0].startswith("# command:")


def test_flags_override_the_config_file(capsys, tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"J": 64}))
    code, out, _ = run(capsys, "seq", "analyze", "gevrey:1",
                       "--config", str(p), "--J", "32")
    assert code == 0
    assert json.loads(out)["config"]["J"] == 32


def test_unknown_config_key_rejected(capsys, tmp_path):
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps({"bogus": 1}))
    code, _, err = run(capsys, "seq", "analyze", "gevrey:1",
                       "--config", str(p))
    assert code == 2
    assert "growthcomp: error:" in err and "bogus" in err


# ---------------------------------------------------------------------------
# error paths
# ---------------------------------------------------------------------------

def test_unknown_sequence_family(capsys):
    code, _, err = run(capsys, "seq", "analyze", "foo:1")
    assert code == 2
    assert "unknown sequence source" in err


def test_unrouted_spaces_exit_two(capsys):
    code, _, err = run(capsys, "spaces", "decide",
                       "--left", "ProjectiveDila:gevrey:2",
                       "--right", "InductiveDila:gevrey:1", "--J", "64")
    assert code == 2
    assert "no decision route" in err


def test_bad_theta_points(capsys):
    code, _, err = run(capsys, "theta", "eval", "gevrey:1", "--t", "1,x")
    assert code == 2
    assert "bad evaluation points" in err


def test_theta_beyond_radius_exits_two(capsys):
    code, _, err = run(capsys, "theta", "eval", "gevrey:1", "--J", "64",
                       "--t", "1e30")
    assert code == 2
    assert "certified" in err


def test_missing_subcommand_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert "required: command" in capsys.readouterr().err
