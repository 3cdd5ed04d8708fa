import json
import subprocess
import sys

import pytest

from halvedhex.cli import parse_fern_list, run


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_formula_hexagon(capsys):
    assert _run(capsys, "formula", "--family", "HEX", "--abc", "2,2,2") == (0, "20\n", "")


def test_formula_fraction_format(capsys):
    code, out, _ = _run(capsys, "formula", "--family", "W1", "--x", "1", "--y", "1")
    assert code == 0 and out == "5/2\n"


def test_formula_ratio_form_prints_both(capsys):
    code, out, _ = _run(capsys, "formula", "--family", "R2", "--x", "1", "--y", "1", "--z", "1",
                        "--a", "1", "--b", "2", "--ratio-form")
    first, second = out.split()
    assert code == 0 and first == second


def test_build_count_render_roundtrip(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert _run(capsys, "region-build", "--family", "H1", "--x", "1", "--y", "1", "--z", "1",
                "--a", "1", "--b", "1", "--out", str(path))[0] == 0
    counts = {_run(capsys, "count", "--in", str(path), "--oracle", o)[1] for o in ("dp", "det", "enum")}
    formula = _run(capsys, "formula", "--family", "H1", "--x", "1", "--y", "1", "--z", "1",
                   "--a", "1", "--b", "1")[1]
    assert counts == {formula}
    svg = tmp_path / "r.svg"
    assert _run(capsys, "render", "--in", str(path), "--format", "svg", "--out", str(svg))[0] == 0
    assert svg.read_text().startswith("<svg")
    code, out, _ = _run(capsys, "render", "--in", str(path))
    assert code == 0 and "^" in out


@pytest.mark.parametrize("fam, extra", [("Q", ["--t", "2,1,2,2"]), ("Kp", ["--t", "3,1,2,2"]),
                                        ("P", ["--abc", "1,2,2"]), ("Pp", ["--abc", "1,1,1"]),
                                        ("S1", ["--x", "1", "--y", "1", "--a", "1", "--b", "1"]),
                                        ("HEX", ["--abc", "1,1,1"])])
def test_every_builder_is_reachable(tmp_path, capsys, fam, extra):
    path = tmp_path / "r.json"
    assert _run(capsys, "region-build", "--family", fam, *extra, "--out", str(path))[0] == 0
    counted = _run(capsys, "count", "--in", str(path))[1]
    assert counted == _run(capsys, "formula", "--family", fam, *extra)[1]


def test_count_empty_region(tmp_path, capsys):
    path = tmp_path / "e.json"
    path.write_text(json.dumps({"cells": [], "weights": []}))
    assert _run(capsys, "count", "--in", str(path)) == (0, "1\n", "")


def test_verify_small_sweep(tmp_path, capsys):
    report, js = tmp_path / "out.csv", tmp_path / "out.json"
    code, out, _ = _run(capsys, "verify", "--families", "H1", "--max-x", "1", "--max-y", "1",
                        "--max-z", "1", "--ferns", "(),(1)", "--report", str(report),
                        "--json", str(js))
    assert code == 0 and "0 mismatched" in out
    assert report.read_text().splitlines()[0].startswith("check,family,x,y,z,a,b,formula,oracle")
    assert json.loads(js.read_text())["summary"]["mismatched"] == 0


def test_identities(capsys):
    code, out, _ = _run(capsys, "identities", "--trials", "10", "--seed", "7")
    assert code == 0 and "60 matched" in out


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["formula"],
    ["formula", "--family", "Q"],
    ["formula", "--family", "HEX", "--abc", "1,2"],
    ["formula", "--family", "H1", "--a", "x"],
    ["verify", "--families", "Z9"],
    ["verify", "--jobs", "0"],
    ["identities", "--trials", "-1"],
    ["count", "--in", "/nonexistent/region.json"],
])
def test_usage_errors(capsys, argv):
    assert _run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["formula", "--family", "N4", "--x", "1", "--a", "0"],
    ["formula", "--family", "P", "--abc", "3,1,1"],
    ["formula", "--family", "S1", "--x", "1"],
    ["region-build", "--family", "H2"],
])
def test_parameter_errors(capsys, argv):
    assert _run(capsys, *argv)[0] == 3


def test_capacity_error(tmp_path, capsys):
    path = tmp_path / "big.json"
    assert _run(capsys, "region-build", "--family", "HEX", "--abc", "4,4,4", "--out", str(path))[0] == 0
    import halvedhex.cli as cli
    old = cli.ENUM_LIMIT
    cli.ENUM_LIMIT = 10
    try:
        assert _run(capsys, "count", "--in", str(path), "--oracle", "enum")[0] == 4
    finally:
        cli.ENUM_LIMIT = old


def test_fern_list_parsing():
    assert parse_fern_list("(),(1),(2,1)") == [(), (1,), (2, 1)]


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "halvedhex", "formula", "--family", "H1", "--x", "2", "--y", "1",
            "--z", "2", "--a", "2,2,3", "--b", "2,2"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == subprocess.run(argv, capture_output=True, check=True).stdout
    assert first.strip().isdigit()
