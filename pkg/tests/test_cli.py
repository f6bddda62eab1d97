"""Command-line interface: subcommands, exit codes, report output."""

import json

import pytest

from sumfree.cli import main


@pytest.fixture()
def set_file(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("".join(f"{n}\n" for n in (1, 3, 9, 27)))
    return str(p)


def test_analyze(set_file, capsys):
    assert main(["analyze", "--input", set_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["stages"]["structure"]["geometric"] is True


def test_extract(set_file, capsys):
    assert main(["extract", "--input", set_file, "--k", "2", "--l", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    cert = out["stages"]["extraction"]["certificate"]
    assert cert["count"] >= 2
    assert cert["k"] == 2 and cert["l"] == 1


def test_verify(set_file, capsys):
    code = main(["verify", "--input", set_file, "--q", "5", "--cutoff", "200"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    stage = out["stages"]["verify"]
    assert stage["all_equal"]
    assert all(r["equal"] for r in stage["identities"])


def test_oracle(set_file, capsys):
    assert main(["oracle", "--input", set_file, "--k", "2", "--l", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["stages"]["oracle"]["gap"] >= 0


def test_report_surplus(capsys):
    code = main(["report", "--kind", "surplus_vs_N", "--sizes", "10,20"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("N,")
    assert len(lines) == 3


def test_missing_file_exits_2(tmp_path):
    assert main(["analyze", "--input", str(tmp_path / "nope.txt")]) == 2


def test_parse_error_exits_2(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("0\n")
    assert main(["analyze", "--input", str(p)]) == 2
