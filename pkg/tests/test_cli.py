from __future__ import annotations

import subprocess
import sys

import pytest

from hullforge.cli import main
from hullforge.io import parse_code_file


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze(capsys, path) -> dict[str, str]:
    rc, out, _ = run(capsys, "analyze", str(path))
    assert rc == 0
    return dict(line.split(": ", 1) for line in out.splitlines())


def test_grs_with_hull_round_trip(capsys, tmp_path):
    path = tmp_path / "grs.txt"
    rc, _, _ = run(capsys, "construct", "grs", "--q", "8", "--points", "1..7", "--k", "3", "--hull", "2",
                   "--out", str(path))
    assert rc == 0
    text = path.read_text()
    assert text.startswith("# GRS n=7 k=3 hull=2\n# multipliers ")
    info = analyze(capsys, path)
    assert (info["n"], info["k"], info["d"], info["d_dual"], info["hull"]) == ("7", "3", "5", "4", "2")
    assert info["macwilliams_selfdual"] == "n/a"


def test_bch_negate_pipeline(capsys, tmp_path):
    src = tmp_path / "bch.txt"
    run(capsys, "construct", "bch", "--q", "3", "--n", "8", "--delta", "3", "--out", str(src))
    before = analyze(capsys, src)
    dst = tmp_path / "neg.txt"
    rc, _, _ = run(capsys, "transform", "negate-variable", str(src), "--out", str(dst))
    assert rc == 0
    assert analyze(capsys, dst)["hull"] == before["hull"]


def test_selfdual_to_hull(capsys, tmp_path):
    src = tmp_path / "sd.txt"
    src.write_text("5 1 6 3\nmodulus 0 1\n1 0 0 2 0 0\n0 1 0 0 2 0\n0 0 1 0 0 2\n")
    assert analyze(capsys, src)["self_dual"] == "true"
    for h in range(3):
        dst = tmp_path / f"h{h}.txt"
        assert run(capsys, "transform", "selfdual-to-hull", str(src), "--h", str(h), "--out", str(dst))[0] == 0
        assert analyze(capsys, dst)["hull"] == str(h)


def test_scale_and_search(capsys, tmp_path):
    src = tmp_path / "c.txt"
    src.write_text("5 1 4 1\nmodulus 0 1\n1 1 1 1\n")
    rc, out, _ = run(capsys, "search", "maxhull", str(src), "--exhaustive")
    assert rc == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["best_h"] == "1" and lines["exhaustive"] == "true"
    dst = tmp_path / "s.txt"
    run(capsys, "transform", "scale", str(src), "--v", lines["witness"], "--out", str(dst))
    assert analyze(capsys, dst)["hull"] == "1"
    rc1, out1, _ = run(capsys, "search", "maxhull", str(src), "--trials", "20", "--seed", "9")
    rc2, out2, _ = run(capsys, "search", "maxhull", str(src), "--trials", "20", "--seed", "9")
    assert out1 == out2 and "exhaustive: false" in out1


def test_lambda_disturb(capsys, tmp_path):
    src = tmp_path / "lcd.txt"
    src.write_text("2 2 4 2\nmodulus 1 1 1\n1 0 0 1\n0 1 2 1\n")
    assert analyze(capsys, src)["lcd"] == "true"
    rc, out, _ = run(capsys, "transform", "lambda-disturb", str(src))
    assert rc == 0 and out.startswith("# lambda-disturbed at position ")
    assert parse_code_file(out).hull_dim() == 1
    # the repetition code fails the shortened-dual hypothesis at every position
    rep = tmp_path / "rep.txt"
    rep.write_text("2 2 3 1\nmodulus 1 1 1\n1 1 1\n")
    rc, _, err = run(capsys, "transform", "lambda-disturb", str(rep))
    assert rc == 1 and "shortened dual is LCD" in err


def test_eaqec_commands(capsys, tmp_path):
    rc, out, _ = run(capsys, "eaqec", "derive", "--n", "7", "--k", "3", "--d", "5", "--d-dual", "4",
                     "--h", "2", "--q", "8")
    assert rc == 0
    assert out.splitlines() == ["[[7, 1, 5, 2]]_8\tsingleton=n/a\tother",
                                "[[7, 2, 4, 1]]_8\tsingleton=2\tMDS"]
    rc, out, _ = run(capsys, "eaqec", "family", "--family", "cor73", "--n", "6", "--h", "1", "--s", "3")
    assert out.startswith("[[6, 2, ≥3, 2]]_8")
    rc, first, _ = run(capsys, "eaqec", "table")
    rc, second, _ = run(capsys, "eaqec", "table")
    assert rc == 0 and first == second and first.startswith("# Table 1:")
    rows = tmp_path / "rows.txt"
    rows.write_text("table 9 2\n4 2\n")
    rc, out, _ = run(capsys, "eaqec", "table", "--input", str(rows), "--numeric")
    assert out.splitlines()[1] == "[[4, 2, 2, 2]]_2\tsingleton=4"


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2 4 2\nmodulus 1 0 1\n1 0 0 0\n0 1 0 0\n")
    rc, _, err = run(capsys, "analyze", str(bad))
    assert rc == 2 and "line 2" in err
    rc, _, err = run(capsys, "construct", "grs", "--q", "8", "--k", "2")
    assert rc == 1 and "--points" in err
    rc, _, err = run(capsys, "construct", "grs", "--q", "9", "--points", "1..4", "--k", "2", "--hull", "1")
    assert rc == 1 and "EvenCharacteristicRequired" in err
    with pytest.raises(SystemExit):
        main(["construct", "nope"])


def test_verify_single_criterion(capsys):
    rc, out, _ = run(capsys, "verify", "--only", "1")
    assert rc == 0 and out.startswith("[PASS]  1. ")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hullforge.cli", "eaqec", "family", "--n", "7", "--k", "3",
                          "--h", "1", "--s", "3"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("[[7, 3, 4, 2]]_8")
