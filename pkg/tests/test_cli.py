import os

import pytest

from gbrauer.cli import format_tableau, main, parse_tableau


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_tableau_roundtrip():
    t = ((1, 1, 1), (1, 1, 2), (-1, 1, 2))
    assert parse_tableau(format_tableau(t)) == t


def test_tableaux_shape_filter(capsys):
    code, out = run_cli(capsys, "tableaux", "--n", "3", "--shape", "1|f=1")
    assert code == 0
    rows = [l for l in out.splitlines() if l and not l.startswith("total")]
    assert len(rows) == 3
    assert out.splitlines()[-1] == "total\t3"


def test_tableaux_single(capsys):
    code, out = run_cli(capsys, "tableaux", "--n", "1")
    assert code == 0
    assert "total\t1" in out


def test_tableaux_residue_filter(capsys):
    code, out = run_cli(
        capsys, "tableaux", "--n", "3", "--delta", "1", "--residues", "0,1,-1"
    )
    assert code == 0
    assert "total\t2" in out  # the crossing pair and the contraction walk


def test_degree_of_worked_example(capsys):
    code, out = run_cli(
        capsys,
        "tableaux",
        "--n",
        "6",
        "--delta",
        "1",
        "--degree-of",
        "+1,1 +1,2 +2,1 +2,2 -2,2 -1,2",
    )
    assert code == 0
    assert "degree\t-1" in out


def test_generators_and_cache(tmp_path, capsys):
    cache = os.path.join(tmp_path, "cache")
    code, out = run_cli(
        capsys, "generators", "--n", "2", "--delta", "1", "--cache-dir", cache
    )
    assert code == 0
    path = os.path.join(cache, "generators-n2-delta1.json")
    assert os.path.exists(path)
    first = open(path).read()
    code, _ = run_cli(
        capsys, "generators", "--n", "2", "--delta", "1", "--cache-dir", cache
    )
    assert code == 0
    assert open(path).read() == first  # bit-identical rebuild


def test_check_deterministic(tmp_path, capsys):
    cache = os.path.join(tmp_path, "cache")
    args = ["check", "--n", "2", "--delta", "1", "--cache-dir", cache, "--format", "structured"]
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "result\tPASS" in out1


def test_check_writes_report_and_figure(tmp_path, capsys):
    out_file = os.path.join(tmp_path, "report.txt")
    code, _ = run_cli(
        capsys,
        "check",
        "--n",
        "2",
        "--delta",
        "0",
        "--out",
        out_file,
        "--suite",
        "idempotent,nazarov",
    )
    assert code == 0
    assert os.path.exists(out_file)
    assert os.path.exists(os.path.join(tmp_path, "report.png"))
    body = open(out_file).read()
    assert "result\tPASS" in body


def test_basis_report(tmp_path, capsys):
    out_file = os.path.join(tmp_path, "basis.txt")
    code, _ = run_cli(
        capsys, "basis", "--n", "2", "--delta", "0", "--out", out_file
    )
    assert code == 0
    body = open(out_file).read()
    assert "poincare\t2 + q^2" in body
    assert "count\t3" in body and "rank\t3" in body
    assert os.path.exists(os.path.join(tmp_path, "basis.png"))


def test_basis_n3(capsys):
    code, out = run_cli(capsys, "basis", "--n", "3", "--delta", "1")
    assert code == 0
    assert "count\t15" in out and "rank\t15" in out


def test_export(capsys):
    code, out = run_cli(capsys, "export", "--n", "2", "--delta", "1", "--structure-constants")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("cell\t")
    assert sum(1 for l in lines if l.startswith("structure\t")) == 1 + 9


def test_size_guard(capsys):
    code = main(["tableaux", "--n", "9"])
    assert code == 2
    code = main(["check", "--n", "5", "--delta", "1"])
    assert code == 2  # requires --extended


def test_bad_delta(capsys):
    code = main(["basis", "--n", "2", "--delta", "x"])
    assert code == 2


def test_time_budget(tmp_path, capsys):
    code, out = run_cli(
        capsys,
        "check",
        "--n",
        "3",
        "--delta",
        "1",
        "--cache-dir",
        os.path.join(tmp_path, "c"),
        "--max-seconds",
        "0.000001",
    )
    assert code == 1
    assert "INCOMPLETE" in out


def test_jobs_flag(tmp_path, capsys):
    cache = os.path.join(tmp_path, "cache")
    base = ["check", "--n", "2", "--delta", "1", "--cache-dir", cache, "--suite", "relations"]
    code1, out1 = run_cli(capsys, *base)
    code2, out2 = run_cli(capsys, *base, "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2
