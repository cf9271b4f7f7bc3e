import json

import pytest

from condcolor.cli import main
from condcolor.io import loads_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, n, m",
    [
        (["generate", "gear", "--n", "4"], 9, 12),
        (["generate", "middle", "--of", "cycle", "--n", "5"], 10, 15),
        (["generate", "windmill", "--k", "4", "--n", "2"], 7, 12),
        (["generate", "--spec", "L(kary(2,2))"], 6, 7),
    ],
)
def test_generate(capsys, tmp_path, argv, n, m):
    out_path = tmp_path / "g.json"
    code, out, _ = run(capsys, *argv, "--out", str(out_path), "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert (info["n"], info["edges"]) == (n, m)
    g = loads_graph(out_path.read_text())
    assert (g.n, g.num_edges) == (n, m)


def test_generate_to_stdout_is_deterministic(capsys):
    _, first, err = run(capsys, "generate", "kpartite", "--sizes", "2,3")
    _, second, _ = run(capsys, "generate", "kpartite", "--sizes", "2,3")
    assert first == second and "n=5 |E|=6" in err


def test_generate_errors(capsys):
    assert run(capsys, "generate", "gear")[0] == 2
    assert run(capsys, "generate", "gear", "--n", "2")[0] == 2
    assert run(capsys, "generate", "middle", "--n", "3")[0] == 2
    assert run(capsys, "generate", "join", "--n", "3")[0] == 2


@pytest.mark.parametrize(
    "spec, r, value",
    [("gear(3)", 2, 4), ("M(K(2,3))", 3, 4), ("M(K(2,3))", 4, 5)],
)
def test_chi(capsys, spec, r, value):
    code, out, _ = run(capsys, "chi", "--spec", spec, "--r", str(r), "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["chi_r"] == value and rep["status"] == "proven"


def test_chi_from_file_and_witness(capsys, tmp_path):
    gpath, wpath = tmp_path / "g.json", tmp_path / "w.json"
    run(capsys, "generate", "cycle", "--n", "6", "--out", str(gpath))
    code, out, _ = run(capsys, "chi", str(gpath), "--r", "2", "--witness-out", str(wpath))
    assert code == 0 and "chi_2 = 3" in out
    code, out, _ = run(capsys, "verify", str(gpath), str(wpath))
    assert code == 0 and out.strip() == "OK"


def test_chi_exit_codes(capsys, tmp_path):
    assert run(capsys, "chi", "--spec", "gear(6)", "--r", "2", "--budget", "5")[0] == 3
    edges = tmp_path / "two.txt"
    edges.write_text("0 1\n2 3\n")
    code, _, err = run(capsys, "chi", str(edges), "--r", "2")
    assert code == 2 and "connected" in err
    assert run(capsys, "chi", str(tmp_path / "missing.json"), "--r", "2")[0] == 2


def _coloring(tmp_path, colors):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(colors))
    return str(p)


def test_verify_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--spec", "cycle(6)", _coloring(tmp_path, [1, 2, 3, 1, 2, 3]),
                       "--r", "2")
    assert code == 0 and "OK" in out
    code, out, _ = run(capsys, "verify", "--spec", "cycle(4)", _coloring(tmp_path, [1, 2, 1, 2]),
                       "--r", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and [v["where"] for v in rep["violations"]] == [0, 1, 2, 3]
    code, out, _ = run(capsys, "verify", "--spec", "complete(3)", _coloring(tmp_path, [1, 1, 2]),
                       "--r", "2")
    assert code == 1 and "C1 at (0, 1)" in out
    code, _, err = run(capsys, "verify", "--spec", "cycle(4)", _coloring(tmp_path, [1, 2]), "--r", "2")
    assert code == 2 and "entries" in err
    assert run(capsys, "verify", "--spec", "cycle(4)", _coloring(tmp_path, [1, 2, 3, 4]))[0] == 2


def test_verify_surjectivity_flag(capsys, tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"format": "condcolor-coloring", "version": 1, "k": 4, "r": 2,
                             "colors": [1, 2, 3, 1, 2, 3]}))
    assert run(capsys, "verify", "--spec", "cycle(6)", str(p))[0] == 1
    assert run(capsys, "verify", "--spec", "cycle(6)", str(p), "--no-surjective")[0] == 0


@pytest.mark.parametrize(
    "spec, verdict, chi",
    [("path(6)", "UNIQUE", 3), ("kpartite(1,3)", "NOT UNIQUE", 3), ("unique32(4)", "UNIQUE", 3)],
)
def test_unique(capsys, spec, verdict, chi):
    code, out, _ = run(capsys, "unique", "--spec", spec, "--r", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == verdict and rep["chi_r"] == chi
    assert (rep["second"] is not None) == (verdict == "NOT UNIQUE")


def test_unique_indeterminate(capsys):
    assert run(capsys, "unique", "--spec", "cycle(6)", "--r", "2", "--cap", "1")[0] == 3


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--spec", "line(windmill(3,2))", "--r", "4",
                       "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["trivial"] == 5 and rep["vset"] == 5 and rep["best"] == 5


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "windmill", "--k", "3", "--n", "2", "--r", "2")
    assert code == 0 and "= 3" in out
    code, out, _ = run(capsys, "formula", "--spec", "gear(5)", "--r", "2", "--construct",
                       "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["value"] == 4 and rep["construction"]["ok"]
    assert run(capsys, "formula", "--spec", "windmill(3,2)", "--r", "1")[0] == 2
    assert run(capsys, "formula", "--spec", "cycle(5)", "--r", "2")[0] == 2


def test_formula_flags_invalid_construction(capsys):
    code, out, _ = run(capsys, "formula", "--spec", "line(kary(2,2))", "--r", "3", "--construct")
    assert code == 1 and "CONSTRUCTION-INVALID" in out


def test_crosscheck(capsys, tmp_path):
    out_path = tmp_path / "rows.jsonl"
    code, out, _ = run(capsys, "crosscheck", "--families", "gear", "--max-n", "6",
                       "--out", str(out_path))
    assert code == 0 and "MISMATCH=0" in out
    rows = [json.loads(line) for line in out_path.read_text().splitlines()]
    assert len(rows) == 16 and all(r["status"] == "MATCH" for r in rows)
    code, out, _ = run(capsys, "crosscheck", "--families", "LWd", "--max-n", "3", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert any(r["family"] == "line(windmill(3,3))" and r["formula"] == r["solver"] == 7 for r in rows)
    assert run(capsys, "crosscheck", "--families", "nope")[0] == 2


def test_crosscheck_mismatch_exit(capsys):
    code, out, _ = run(capsys, "crosscheck", "--families", "LT", "--max-n", "2")
    assert code == 1 and "MISMATCH" in out


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "condcolor", "chi", "--spec", "cycle(5)", "--r", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "chi_2 = 5" in res.stdout
