# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import os
import sys
import csv
import time
import typing
import asyncio
import logging
import tempfile

from dataclasses import dataclass, field

from ..core import exceptions as fex
from ..formats.report import read_report


BENCH_COLUMNS = [
    "instance",
    "algo",
    "status",
    "cost",
    "wall_time",
    "exit_code",
    "agreement",
]


@dataclass
class BenchRow:
    instance: str
    algo: str
    status: str = "pending"
    cost: typing.Optional[int] = None
    wall_time: float = 0.0
    exit_code: typing.Optional[int] = None
    agreement: typing.Optional[bool] = None

    def as_dict(self) -> typing.Dict[str, typing.Any]:
        return {
            "instance": self.instance,
            "algo": self.algo,
            "status": self.status,
            "cost": "" if self.cost is None else self.cost,
            "wall_time": f"{self.wall_time:.3f}",
            "exit_code": "" if self.exit_code is None else self.exit_code,
            "agreement": "" if self.agreement is None else str(self.agreement).lower(),
        }


@dataclass
class BenchRunner:
    """
    Runs every (instance, algorithm) cell as its own solve process, at
    most `workers` at a time. Timeouts and failures are recorded in the
    row and never stop the run.
    """

    algos: typing.List[str]
    timeout: float = 60.0
    workers: int = 4
    extra_args: typing.List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        assert self.workers > 0
        if not self.algos:
            raise fex.ParameterException(
                parameter="algos",
                reason="the benchmark needs at least one algorithm",
            )

    async def run(self, paths: typing.List[str]) -> typing.List[BenchRow]:
        logging.info(
            f"Benchmarking {len(paths)} instances x {len(self.algos)} algorithms"
        )
        gate = asyncio.Semaphore(self.workers)

        with tempfile.TemporaryDirectory(prefix="fccsolve-bench-") as tmp:
            cells = [
                self._cell(gate, tmp, i, path, algo)
                for i, path in enumerate(paths)
                for algo in self.algos
            ]
            rows = list(await asyncio.gather(*cells))

        mark_agreement(rows)
        return rows

    async def _cell(
        self,
        gate: asyncio.Semaphore,
        tmp: str,
        index: int,
        path: str,
        algo: str,
    ) -> BenchRow:
        row = BenchRow(instance=path, algo=algo)
        report = os.path.join(tmp, f"{index}-{algo}.json")

        async with gate:
            logging.debug(f"Starting {algo} on {path}")
            started = time.perf_counter()
            proc = await asyncio.create_subprocess_exec(
                sys.executable,
                "-m",
                "fccsolve",
                "solve",
                path,
                "--algo",
                algo,
                "--report",
                report,
                *self.extra_args,
                stdout=asyncio.subprocess.DEVNULL,
                stderr=asyncio.subprocess.PIPE,
            )
            try:
                _, err = await asyncio.wait_for(
                    proc.communicate(), timeout=self.timeout
                )
            except asyncio.TimeoutError:
                proc.kill()
                await proc.wait()
                row.status = "timeout"
                row.wall_time = time.perf_counter() - started
                logging.warning(f"Timeout: {algo} on {path}")
                return row

            row.wall_time = time.perf_counter() - started
            row.exit_code = proc.returncode

        if proc.returncode != 0:
            row.status = "error"
            logging.warning(
                f"{algo} on {path} exited with {proc.returncode}: "
                f"{err.decode(errors='replace').strip()}"
            )
            return row

        try:
            row.cost = read_report(report).cost
            row.status = "ok"
        except (OSError, fex.ReportParseException) as ex:
            row.status = "error"
            logging.warning(f"Unreadable report for {algo} on {path}: {ex}")

        return row


def mark_agreement(rows: typing.List[BenchRow]) -> None:
    """
    Per instance, true when every finished algorithm found the same cost.
    Rows without a cost stay blank.
    """
    costs: typing.Dict[str, typing.Set[int]] = {}
    for row in rows:
        if row.cost is not None:
            costs.setdefault(row.instance, set()).add(row.cost)

    for row in rows:
        if row.cost is not None:
            row.agreement = len(costs[row.instance]) == 1


def write_table(rows: typing.List[BenchRow], out: typing.TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_dict())


def instance_paths(directory: str) -> typing.List[str]:
    return sorted(
        os.path.join(directory, f)
        for f in os.listdir(directory)
        if f.endswith(".fcc")
    )
