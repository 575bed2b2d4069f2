import json

import pytest

from pocket_spectra import graph6
from pocket_spectra.catalog import small_graph_lines
from pocket_spectra.cli import main
from pocket_spectra.graph import path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_build_commands(capsys):
    code, out = run(capsys, "build", "--vertex-pockets", "-F", "K2", "-Vk", "0", "-H", "P2", "-v", "1", "--g6")
    assert code == 0 and graph6.decode(out.strip()).degree_sequence() == path(3).degree_sequence()
    code, rep = run_json(capsys, "build", "--edge-pockets", "-F", "K4", "-Ek", "0-1,2-3", "-H", "K5", "-uv", "0-1")
    assert code == 0 and rep["outputs"]["order"] == 10
    assert rep["outputs"]["assumptions"]["ek_spanning"] is True
    code, rep = run_json(capsys, "build", "--corona", "-F", "C3", "-H", "K1")
    assert rep["outputs"]["order"] == 6


def test_charpoly_routes(capsys):
    code, rep = run_json(capsys, "charpoly", "P3", "--matrix", "A")
    assert code == 0 and rep["outputs"]["charpoly"] == [0, -2, 0, 1]
    code, rep = run_json(capsys, "charpoly", "--edge-pockets", "-F", "K4", "-Ek", "0-1,2-3", "-H", "K5",
                         "-uv", "0-1", "--matrix", "Q", "--via", "both")
    assert code == 0 and all(c["pass"] for c in rep["checks"])
    code, rep = run_json(capsys, "charpoly", "--vertex-pockets", "-F", "P3", "-Vk", "0", "-H", "K1vP3",
                         "-v", "0", "--via", "formula", "--fast-path")
    assert code == 2 and rep["error"]["type"] == "PreconditionViolation"
    code, rep = run_json(capsys, "charpoly", "P3", "--via", "formula")
    assert code == 2


def test_spectrum(capsys):
    code, rep = run_json(capsys, "spectrum", "K1vC4")
    assert code == 0 and rep["checks"][0]["pass"]
    code, out = run(capsys, "spectrum", "C4", "--matrix", "Q", "--csv")
    assert code == 0 and out.splitlines()[0].startswith("value")


def test_verify_and_exit_codes(capsys):
    code, rep = run_json(capsys, "verify", "prop35", "--count", "5", "--seed", "7")
    assert code == 0 and len(rep["checks"]) == 5
    code, rep = run_json(capsys, "verify", "thm46", "-n", "3", "-m", "5")
    assert code == 0
    code, rep = run_json(capsys, "verify", "inherit", "--kind", "Q-edge")
    assert code == 0
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuch"])
    assert exc.value.code == 2


def test_cospectral_commands(capsys, tmp_path):
    code, rep = run_json(capsys, "cospectral", "check", "K1,4", "C4uK1", "--kind", "A")
    assert code == 0 and rep["outputs"]["nonisomorphic_witness"] == "degree-sequence"
    code, rep = run_json(capsys, "cospectral", "check", "C6", "2K3")
    assert code == 1 and rep["outputs"]["first_diff_coeff"] is not None
    code, rep = run_json(capsys, "cospectral", "construct", "--seeds", "shrikhande,rook", "-F", "P4",
                         "--Vk", "0,1", "--kind", "Q")
    assert code == 0 and rep["checks"][0]["pass"]
    catalog = tmp_path / "all5.g6"
    catalog.write_text("\n".join(small_graph_lines(5)) + "\n")
    code, rep = run_json(capsys, "cospectral", "search", "--in", str(catalog), "--kind", "A")
    assert code == 0 and [(p["line1"], p["line2"]) for p in rep["outputs"]["pairs"]] == [(10, 11)]


def test_missing_file_is_usage_error(capsys):
    code, rep = run_json(capsys, "cospectral", "search", "--in", "/nonexistent/x.g6")
    assert code == 2 and "error" in rep


def test_stable_reports_are_byte_identical(capsys):
    argv = ["verify", "prop31", "--count", "4", "--seed", "3", "--stable"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and "wall_time_ms" not in first[1]
    _, rep = run_json(capsys, "charpoly", "P3")
    assert "wall_time_ms" in rep
