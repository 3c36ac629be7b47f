import json
import subprocess
import sys

import pytest

from tilecoh.cli import main, precision
from tilecoh.cli.main import EXIT_DATA, EXIT_DISTINGUISHED, EXIT_NOINPUT, EXIT_OK, EXIT_USAGE
from tilecoh.rule_format import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_validate_chair(capsys):
    code, rep, _ = run(capsys, "validate", "chair")
    assert code == EXIT_OK
    assert rep["schema_version"] == 1 and rep["command"] == "validate"
    assert not rep["results"]["as_given"]["ok"] and rep["results"]["after_edge_split"]["ok"]
    assert rep["caveats"]
    assert len(rep["inputs"][0]["sha256"]) == 64


def test_validate_combinatorial(capsys):
    code, rep, _ = run(capsys, "validate", "penrose_combinatorial")
    assert code == EXIT_OK and rep["results"]["identities"]["ok"]


def test_complex_report(capsys):
    code, rep, _ = run(capsys, "complex", "chair", "--no-collar", "--variant", "x")
    assert code == EXIT_OK
    res = rep["results"]
    assert res["ranks"] == {"faces": 1, "edges": 1, "vertices": 2}
    assert res["orientation_group"]["order"] == 4
    assert res["corona_counts"]["up_to_rotation"] == 14


def test_cohomology_report(capsys):
    code, rep, _ = run(capsys, "cohomology", "penrose_combinatorial", "--variant", "x")
    assert code == EXIT_OK
    H = rep["results"]["approximant"]["H"]
    assert [h["group"] for h in H] == ["Z", "Z^5", "Z^8"]
    code, rep, _ = run(capsys, "cohomology", "penrose_combinatorial")
    assert rep["results"]["H3_all_orientations"]["group"] == "Z^2"


def test_cohomology_bad_coefficients(capsys):
    code, _, err = run(capsys, "cohomology", "penrose_combinatorial", "--variant", "x", "--coefficients", "3")
    assert code == EXIT_DATA and "divisor" in err


def test_invariant_report(capsys):
    code, rep, _ = run(capsys, "invariant", "chair", "--no-collar")
    assert code == EXIT_OK
    assert rep["results"]["mu_image"]["ring"] == "Z[1/4]"


def test_compare_exit_codes(capsys):
    code, rep, _ = run(capsys, "compare", "chair", "chair")
    assert code == EXIT_OK and rep["results"]["inconclusive"]
    code, rep, _ = run(capsys, "compare", "penrose_combinatorial", "chair")
    assert code == EXIT_DISTINGUISHED and rep["results"]["outcome"] == "Distinguished"


@pytest.mark.parametrize("name,tile,level,count", [("chair", "L", 4, 256), ("chair", "L", 0, 1),
                                                   ("pinwheel", "T", 3, 125), ("penrose_triangles", "acute", 2, 5)])
def test_render_counts(capsys, tmp_path, name, tile, level, count):
    out = tmp_path / "x.svg"
    code, rep, _ = run(capsys, "render", name, "--tile", tile, "--level", str(level), "--out", str(out))
    assert code == EXIT_OK and rep["results"]["polygons"] == count
    assert out.read_text().count("<polygon") == count


def test_render_errors(capsys, tmp_path):
    out = str(tmp_path / "x.svg")
    assert run(capsys, "render", "penrose_combinatorial", "--out", out)[0] == EXIT_DATA
    assert run(capsys, "render", "chair", "--tile", "chair", "--out", out)[0] == EXIT_DATA


def test_precision_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TILECOH_PRECISION", "3")
    assert precision() == 3
    out = tmp_path / "x.svg"
    run(capsys, "render", "penrose_triangles", "--level", "1", "--out", str(out))
    svg = out.read_text()
    assert 'data-precision="3"' in svg
    nums = [p for line in svg.splitlines() if "points=" in line
            for p in line.split('points="')[1].split('"')[0].replace(",", " ").split()]
    assert all(len(n.split(".")[1]) <= 3 for n in nums if "." in n)
    monkeypatch.setenv("TILECOH_PRECISION", "99")
    with pytest.raises(ValueError):
        precision()


def test_usage_and_missing_input(capsys):
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "validate", "/nonexistent/file.tsys.json")[0] == EXIT_NOINPUT


def test_malformed_input(capsys, tmp_path):
    p = tmp_path / "bad.tsys.json"
    p.write_text('{"name": 3}')
    code, _, err = run(capsys, "validate", str(p))
    assert code == EXIT_DATA and "$.name" in err


def test_output_file_and_timing(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["--timing", "-o", str(out), "validate", "square"]) == EXIT_OK
    rep = json.loads(out.read_text())
    assert "timing_seconds" in rep


def test_reports_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["-o", str(a), "cohomology", "chair"])
    main(["-o", str(b), "cohomology", "chair"])
    assert a.read_bytes() == b.read_bytes()


def test_installed_entry_point(tmp_path):
    path = str(fixture_path("square"))
    proc = subprocess.run([sys.executable, "-m", "tilecoh.cli.main", "validate", path],
                          capture_output=True, text=True, timeout=300)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["inputs"][0]["path"] == path
