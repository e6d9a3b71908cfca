# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import json

import pytest

from conftest import instance_path

from fccsolve.cli.fccsolve import main
from fccsolve.cli.commands import ExitCode, get_commands
from fccsolve.formats import parse_instance, read_report


def test_commands():
    assert set(get_commands()) == {"solve", "decompose", "gen", "bench", "verify"}


def test_no_arguments_prints_help(capsys):
    assert main([]) == ExitCode.OK
    assert "solve" in capsys.readouterr().out


def test_unknown_subcommand():
    assert main(["frobnicate"]) == ExitCode.COMMAND_LINE_ERROR


# ----- solve ----------------------------------------------------------------


@pytest.mark.parametrize("algo", ["oracle", "vc", "tw-xp", "td"])
def test_solve_fig1(algo, capsys):
    rc = main(["solve", instance_path("fig1"), "--algo", algo])
    assert rc == ExitCode.OK
    out = capsys.readouterr().out
    assert f"solver: {algo}" in out
    assert "cost: 8" in out
    assert "fair: True" in out


def test_solve_with_budget(capsys):
    path = instance_path("path6")
    assert main(["solve", path, "--algo", "oracle", "--budget", "2"]) == ExitCode.OK
    assert "budget: 2 -> YES" in capsys.readouterr().out

    rc = main(["solve", path, "--algo", "oracle", "--budget", "1"])
    assert rc == ExitCode.BUDGET_EXCEEDED
    assert "budget: 1 -> NO" in capsys.readouterr().out


def test_solve_with_seed(capsys):
    rc = main(["solve", instance_path("star6"), "--algo", "vc", "--seed", "3"])
    assert rc == ExitCode.OK
    assert "cost: 6" in capsys.readouterr().out


def test_solve_report_then_verify(tmp_path, capsys):
    report = str(tmp_path / "r.json")
    path = instance_path("fig1_mono")
    assert main(["solve", path, "--algo", "tw-fpt2", "--report", report]) == ExitCode.OK
    assert read_report(report).cost == 4

    assert main(["verify", path, report]) == ExitCode.OK
    assert "OK" in capsys.readouterr().out
    assert main(["verify", path, report, "--budget", "3"]) == ExitCode.BUDGET_EXCEEDED


def test_verify_rejects_wrong_claims(tmp_path, capsys):
    report = str(tmp_path / "r.json")
    path = instance_path("path6")
    assert main(["solve", path, "--algo", "oracle", "--report", report]) == ExitCode.OK

    with open(report) as fh:
        data = json.load(fh)
    data["cost"] = 1
    with open(report, "w") as fh:
        json.dump(data, fh)
    assert main(["verify", path, report]) == ExitCode.ERROR

    data["cost"] = 2
    data["clusters"] = [[1, 3], [2, 4], [5, 6]]
    with open(report, "w") as fh:
        json.dump(data, fh)
    assert main(["verify", path, report]) == ExitCode.ERROR
    assert "not fair" in capsys.readouterr().out


def test_solve_with_decomposition_files(tmp_path, capsys):
    path = instance_path("path6")
    td = tmp_path / "p.td"
    td.write_text("s td 5 2 6\nb 1 1 2\nb 2 2 3\nb 3 3 4\nb 4 4 5\nb 5 5 6\n1 2\n2 3\n3 4\n4 5\n")
    forest = tmp_path / "p.forest"
    forest.write_text("1 2\n2 4\n3 2\n4 0\n5 4\n6 5\n")

    assert main(["solve", path, "--algo", "tw-xp", "--td-file", str(td)]) == ExitCode.OK
    assert main(["solve", path, "--algo", "td", "--forest-file", str(forest)]) == ExitCode.OK
    assert capsys.readouterr().out.count("cost: 2") == 2

    rc = main(["solve", path, "--td-file", str(td), "--seed", "1"])
    assert rc == ExitCode.PRECONDITION_FAILED


def test_solve_failures(tmp_path, capsys):
    assert main(["solve", instance_path("fig1"), "--algo", "tw-fpt2"]) == ExitCode.PRECONDITION_FAILED
    assert (
        main(["solve", instance_path("fig1"), "--algo", "oracle", "--oracle-cap", "5"])
        == ExitCode.PRECONDITION_FAILED
    )
    assert main(["solve", str(tmp_path / "missing.fcc")]) == ExitCode.COMMAND_LINE_ERROR

    bad = tmp_path / "bad.fcc"
    bad.write_text("p fcc 2 1 1\nn 1 1\nn 2 1\ne 2 1\n")
    assert main(["solve", str(bad)]) == ExitCode.PARSE_ERROR
    assert "PARSE ERROR" in capsys.readouterr().err

    assert main(["solve", instance_path("fig1"), "--algo", "simplex"]) == ExitCode.COMMAND_LINE_ERROR


def test_solve_with_bad_config(tmp_path):
    cfg = tmp_path / "fccsolve.conf"
    cfg.write_text("[solver]\noracle_cap = many\n")
    rc = main(["solve", instance_path("path6"), "--config", str(cfg)])
    assert rc == ExitCode.CONFIGURATION_PROBLEM


# ----- decompose and gen ----------------------------------------------------


def test_decompose_all(capsys):
    assert main(["decompose", instance_path("path6")]) == ExitCode.OK
    out = capsys.readouterr().out
    assert "c vertex cover of size 3" in out
    assert "c tree decomposition of width 1" in out
    assert "c treedepth forest of height 3" in out
    assert "c treewidth = 1" in out


def test_decompose_vertex_cover_only(capsys):
    assert main(["decompose", instance_path("star6"), "--kind", "vc"]) == ExitCode.OK
    out = capsys.readouterr().out
    assert out == "c vertex cover of size 1\nv 1\n"


def test_gen_is_reproducible(tmp_path, capsys):
    args = ["gen", "--family", "gnp", "--n", "6", "--fairlet", "2,1", "--seed", "9"]
    out = tmp_path / "g.fcc"
    assert main(args + ["--output", str(out)]) == ExitCode.OK
    assert main(args) == ExitCode.OK
    assert capsys.readouterr().out == out.read_text()

    instance = parse_instance(str(out))
    assert instance.color_counts() == (4, 2)
    assert out.read_text().startswith("c family=gnp n=6 fairlet=2,1 seed=9\n")


def test_gen_rejects_bad_sizes():
    args = ["gen", "--family", "tree", "--n", "5", "--fairlet", "1,1"]
    assert main(args) == ExitCode.PRECONDITION_FAILED
    assert main(["gen", "--family", "tree", "--n", "4", "--fairlet", "x"]) == ExitCode.COMMAND_LINE_ERROR


# ----- bench ----------------------------------------------------------------


@pytest.mark.slow
def test_bench(tmp_path, monkeypatch):
    import os

    monkeypatch.setenv(
        "PYTHONPATH",
        os.pathsep.join([os.path.join(os.path.dirname(__file__), "..", "src")]),
    )
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    for name in ["two_edges", "path6"]:
        (corpus / f"{name}.fcc").write_text(open(instance_path(name)).read())

    table = tmp_path / "bench.csv"
    args = ["bench", str(corpus), "--algo", "oracle", "--algo", "vc", "--output", str(table)]
    assert main(args) == ExitCode.OK

    lines = table.read_text().splitlines()
    assert lines[0] == "instance,algo,status,cost,wall_time,exit_code,agreement"
    assert len(lines) == 5
    assert all(",ok," in line and line.endswith(",true") for line in lines[1:])
