# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import io
import asyncio
import logging

import pytest

from fccsolve.core import exceptions as fex
from fccsolve.utils.bench_runner import (
    BenchRow,
    BenchRunner,
    instance_paths,
    mark_agreement,
    write_table,
)


def test_agreement_per_instance():
    rows = [
        BenchRow("a.fcc", "oracle", "ok", cost=3),
        BenchRow("a.fcc", "vc", "ok", cost=3),
        BenchRow("a.fcc", "td", "timeout"),
        BenchRow("b.fcc", "oracle", "ok", cost=1),
        BenchRow("b.fcc", "vc", "ok", cost=2),
    ]
    mark_agreement(rows)
    assert [r.agreement for r in rows] == [True, True, None, False, False]


def test_table_layout():
    row = BenchRow("a.fcc", "vc", "ok", cost=3, wall_time=0.25, exit_code=0)
    mark_agreement([row])
    out = io.StringIO()
    write_table([row, BenchRow("b.fcc", "td", "timeout", wall_time=60.0)], out)
    assert out.getvalue().splitlines() == [
        "instance,algo,status,cost,wall_time,exit_code,agreement",
        "a.fcc,vc,ok,3,0.250,0,true",
        "b.fcc,td,timeout,,60.000,,",
    ]


def test_instance_paths(tmp_path):
    for name in ["b.fcc", "a.fcc", "notes.txt"]:
        (tmp_path / name).write_text("")
    paths = instance_paths(str(tmp_path))
    assert [p.rsplit("/", 1)[-1] for p in paths] == ["a.fcc", "b.fcc"]


def test_runner_needs_algorithms():
    with pytest.raises(fex.ParameterException):
        BenchRunner(algos=[])


# ----- Failing cells --------------------------------------------------------


class _Process:
    def __init__(self, returncode, delay=0.0, err=b""):
        self.returncode = returncode
        self._delay = delay
        self._err = err

    async def communicate(self):
        await asyncio.sleep(self._delay)
        return b"", self._err

    def kill(self):
        self.returncode = -9

    async def wait(self):
        return self.returncode


def _spawning(monkeypatch, proc):
    async def spawn(*args, **kwargs):
        return proc

    monkeypatch.setattr(asyncio, "create_subprocess_exec", spawn)


def test_timeout_is_a_warning(monkeypatch, caplog):
    _spawning(monkeypatch, _Process(None, delay=10.0))
    runner = BenchRunner(algos=["vc"], timeout=0.05, workers=1)

    with caplog.at_level(logging.INFO):
        (row,) = asyncio.run(runner.run(["a.fcc"]))

    assert row.status == "timeout"
    assert row.cost is None
    warned = [r for r in caplog.records if r.levelno == logging.WARNING]
    assert [r.getMessage() for r in warned] == ["Timeout: vc on a.fcc"]


def test_failed_solve_is_a_warning(monkeypatch, caplog):
    _spawning(monkeypatch, _Process(7, err=b"no fair clustering"))
    runner = BenchRunner(algos=["td"], workers=1)

    with caplog.at_level(logging.INFO):
        (row,) = asyncio.run(runner.run(["a.fcc"]))

    assert row.status == "error"
    assert row.exit_code == 7
    assert any(
        r.levelno == logging.WARNING and "no fair clustering" in r.getMessage()
        for r in caplog.records
    )
