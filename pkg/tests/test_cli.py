import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from relshape import cli
from relshape.verification import THREE_INFLECTION_ORDER7

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "analysis_report.schema.json"


def run_cli(*args, **kwargs):
    return subprocess.run([sys.executable, "-m", "relshape", *args],
                          capture_output=True, text=True, **kwargs)


def run_inproc(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- analyze ---------------------------------------------------------------------

def test_analyze_path6_text(capsys):
    code, out, _ = run_inproc(capsys, "analyze", "--family", "path:6")
    assert code == 0
    assert "class=N" in out
    assert "decrease interval: (0.2137" in out
    assert "0.5850" in out


def test_analyze_complete5_class(capsys):
    code, out, _ = run_inproc(capsys, "analyze", "--family", "complete:5")
    assert code == 0
    assert "class=monotone-no-interior-fixed-point" in out


def test_analyze_three_inflection_graph6(capsys):
    code, out, _ = run_inproc(capsys, "analyze", "--graph6", "F?L^_")
    assert code == 0
    assert out.count("inflection:") == 3


def test_analyze_json_validates_against_schema(capsys):
    schema = json.loads(SCHEMA_PATH.read_text())
    for selector in ["path:6", "complete:5", "union(star:12,complete:1)", "empty:4",
                     "complete-bipartite:3,3", "bonded-complete-leaf:9"]:
        code, out, _ = run_inproc(capsys, "analyze", "--family", selector, "--json")
        assert code == 0
        jsonschema.validate(json.loads(out), schema)


def test_analyze_json_matches_text_numbers(capsys):
    code, out, _ = run_inproc(capsys, "analyze", "--family", "path:6", "--json")
    doc = json.loads(out)
    assert doc["shape"]["class"] == "N"
    assert doc["shape"]["deriv_at_0"] == "6"
    assert doc["shape"]["deriv_at_1"] == "4"
    assert doc["coefficients"]["c"] == ["0", "6", "5", "4", "3", "2", "1"]
    assert doc["input"]["min_vertex_cut"] == 1


def test_analyze_edges_file(tmp_path, capsys):
    path = tmp_path / "g.edges"
    path.write_text(THREE_INFLECTION_ORDER7)
    code, out, _ = run_inproc(capsys, "analyze", "--edges", str(path))
    assert code == 0
    assert out.count("inflection:") == 3


def test_analyze_large_family_uses_closed_profile(capsys):
    code, out, _ = run_inproc(capsys, "analyze", "--family", "cycle:50")
    assert code == 0
    assert "fixed-point witness: f(1/4) < 1/4 (2-connected)" in out


def test_analyze_selector_required(capsys):
    code, _, err = run_inproc(capsys, "analyze")
    assert code == 2
    code, _, err = run_inproc(capsys, "analyze", "--family", "path:6", "--graph6", "DQc")
    assert code == 2


def test_analyze_bad_inputs(capsys):
    assert run_inproc(capsys, "analyze", "--graph6", "~~~")[0] == 2
    assert run_inproc(capsys, "analyze", "--family", "heptagon:7")[0] == 2
    assert run_inproc(capsys, "analyze", "--family", "path:sixteen")[0] == 2
    assert run_inproc(capsys, "analyze", "--family", "complete:80")[0] == 2


def test_analyze_enumeration_cap_named(capsys):
    code, _, err = run_inproc(capsys, "analyze", "--graph6", "~")
    assert code == 2


# -- coeffs ----------------------------------------------------------------------

def test_coeffs_path4(capsys):
    code, out, _ = run_inproc(capsys, "coeffs", "--family", "path:4")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:]]
    assert [r[1] for r in rows] == ["0", "4", "3", "2", "1"]


def test_coeffs_complete4(capsys):
    code, out, _ = run_inproc(capsys, "coeffs", "--family", "complete:4")
    rows = [line.split() for line in out.splitlines()[1:]]
    assert [r[1] for r in rows] == ["0", "4", "6", "4", "1"]


def test_coeffs_star6_json(capsys):
    code, out, _ = run_inproc(capsys, "coeffs", "--family", "star:6", "--json")
    doc = json.loads(out)
    # d_{n-1} for the star equals 2s + n(n-1) - r(2n-r-1) with r=5, s=0
    assert doc["rows"][5]["d"] == str(0 + 6 * 5 - 5 * (12 - 5 - 1))


# -- plot ------------------------------------------------------------------------

def test_plot_header_and_midpoint(capsys):
    code, out, _ = run_inproc(capsys, "plot", "--family", "complete:3", "--samples", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,value"
    assert lines[1] == "0,0"
    assert lines[2] == "0.5,0.875"
    assert lines[3] == "1,1"


def test_plot_sample_count(capsys):
    code, out, _ = run_inproc(capsys, "plot", "--family", "path:6", "--samples", "101")
    assert len(out.splitlines()) == 102


def test_plot_derivative_options(capsys):
    code, out, _ = run_inproc(capsys, "plot", "--family", "path:6", "--samples", "3",
                              "--which", "f1")
    assert code == 0
    assert out.splitlines()[1] == "0,6"
    code, out, _ = run_inproc(capsys, "plot", "--family", "complete:3", "--samples", "3",
                              "--which", "f2")
    assert out.splitlines()[1] == "0,-6"


def test_plot_m_shape_has_two_humps(capsys):
    code, out, _ = run_inproc(capsys, "plot", "--family", "union(star:20,complete:1)",
                              "--samples", "201")
    values = [float(line.split(",")[1]) for line in out.splitlines()[1:]]
    rises = sum(1 for a, b in zip(values, values[1:]) if b > a)
    falls = sum(1 for a, b in zip(values, values[1:]) if b < a)
    assert rises and falls
    direction = [b > a for a, b in zip(values, values[1:])]
    switches = sum(1 for a, b in zip(direction, direction[1:]) if a != b)
    assert switches == 3  # up, down, up, down


def test_plot_needs_two_samples(capsys):
    assert run_inproc(capsys, "plot", "--family", "path:6", "--samples", "1")[0] == 2


def test_plot_out_file_and_determinism(tmp_path):
    a = run_cli("plot", "--family", "path:6", "--samples", "51")
    b = run_cli("plot", "--family", "path:6", "--samples", "51")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    out = tmp_path / "curve.csv"
    c = run_cli("plot", "--family", "path:6", "--samples", "51", "--out", str(out))
    assert c.returncode == 0
    assert out.read_text() == a.stdout


# -- census ----------------------------------------------------------------------

def test_census_order6(capsys):
    code, out, _ = run_inproc(capsys, "census", "--n", "6")
    assert code == 0
    assert "decrease: 37/112" in out


def test_census_json(capsys):
    code, out, _ = run_inproc(capsys, "census", "--n", "5", "--json")
    doc = json.loads(out)
    assert doc["total_connected"] == 21
    assert sum(doc["inflection_histogram"].values()) == 21


def test_census_input_file(fixtures_dir, capsys):
    code, out, _ = run_inproc(capsys, "census", "--input",
                              str(fixtures_dir / "connected_order6.g6"))
    assert code == 0
    assert "decrease: 37/112" in out


def test_census_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.g6"
    path.write_text("")
    code, out, _ = run_inproc(capsys, "census", "--input", str(path))
    assert code == 0
    assert "0 graphs" in out


def test_census_corrupt_file(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("E?Bw\nE?$$\n")
    code, _, err = run_inproc(capsys, "census", "--input", str(path))
    assert code == 2
    assert "line 2" in err


def test_census_selector_exclusive(capsys):
    assert run_inproc(capsys, "census")[0] == 2
    assert run_inproc(capsys, "census", "--n", "5", "--input", "x.g6")[0] == 2


def test_census_determinism():
    a = run_cli("census", "--n", "5", "--json")
    b = run_cli("census", "--n", "5", "--json")
    assert a.stdout == b.stdout


# -- verify ----------------------------------------------------------------------

def test_verify_single_check(capsys):
    code, out, _ = run_inproc(capsys, "verify", "--only", "path6")
    assert code == 0
    assert "PASS" in out and "path6-decrease-endpoints" in out


def test_verify_json(capsys):
    code, out, _ = run_inproc(capsys, "verify", "--only", "threshold", "--json")
    assert code == 0
    results = json.loads(out)
    assert results and all(r["passed"] for r in results)


def test_verify_fails_on_tampered_expectation(capsys, monkeypatch):
    from relshape import verification

    monkeypatch.setitem(verification.CENSUS_EXPECTED, 6,
                        {"total": 112, "decrease": 38, "budget_s": 10.0})
    code, out, _ = run_inproc(capsys, "verify", "--only", "census-order-6")
    assert code == 1
    assert "FAIL" in out


# -- global behaviour ---------------------------------------------------------------

def test_env_tolerance_respected(capsys, monkeypatch):
    monkeypatch.setenv("RELSHAPE_TOL", "1e-4")
    code, out, _ = run_inproc(capsys, "analyze", "--family", "path:6", "--json")
    assert json.loads(out)["tol"] == "1/10000"


def test_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("RELSHAPE_TOL", "1e-4")
    code, out, _ = run_inproc(capsys, "analyze", "--family", "path:6", "--json",
                              "--tol", "1e-6")
    assert json.loads(out)["tol"] == "1/1000000"


def test_bad_tolerance(capsys):
    assert run_inproc(capsys, "analyze", "--family", "path:6", "--tol", "zero")[0] == 2
    assert run_inproc(capsys, "analyze", "--family", "path:6", "--tol=-1e-9")[0] == 2


def test_usage_error_exit_code():
    proc = run_cli()
    assert proc.returncode == 2


def test_module_entry_point():
    proc = run_cli("analyze", "--family", "complete:3")
    assert proc.returncode == 0
    assert "class=monotone-no-interior-fixed-point" in proc.stdout


def test_console_script():
    proc = subprocess.run(["relshape", "coeffs", "--family", "path:4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
