# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import sys
import typing
import argparse

from fccsolve.solvers import SolverRegistry
from fccsolve.utils.bench_runner import BenchRunner, instance_paths, write_table

from .exit_code import ExitCode
from .command import AsyncCommand


class BenchCommand(AsyncCommand):

    @classmethod
    def command(cls) -> str:
        return "bench"

    @classmethod
    def help(cls) -> str:
        return "Run several solvers over a directory of instances"

    @classmethod
    def description(cls) -> str:
        return """
Run every chosen algorithm on every .fcc file of a directory, each in its
own process, and print a CSV table of costs, times, statuses and whether
the algorithms agree per instance.
"""

    @classmethod
    def build_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "directory",
            metavar="<instance directory>",
            type=str,
            help="Directory of instance files",
        )
        parser.add_argument(
            "--algo",
            dest="algos",
            action="append",
            default=[],
            choices=SolverRegistry.names(),
            help="Algorithm to run; repeat for several. Default is oracle, vc, tw-xp and td.",
        )
        parser.add_argument(
            "--timeout",
            dest="timeout",
            action="store",
            default=None,
            type=float,
            metavar="<seconds>",
            help="Time limit per run",
        )
        parser.add_argument(
            "--workers",
            dest="workers",
            action="store",
            default=None,
            type=int,
            metavar="<number>",
            help="Runs in parallel",
        )
        parser.add_argument(
            "--output",
            dest="output",
            action="store",
            default=None,
            metavar="<path>",
            help="Write the CSV table here instead of standard output",
        )

        cls.add_default_options(parser)

    async def main(
        self,
        args: argparse.Namespace,
        rem: typing.List[str],
    ) -> ExitCode:
        """
        Main entry point for the application.
        """
        try:
            settings = self.settings(args)
            paths = instance_paths(args.directory)

            extra: typing.List[str] = []
            if args.config:
                extra += ["--config", args.config]

            runner = BenchRunner(
                algos=args.algos or ["oracle", "vc", "tw-xp", "td"],
                timeout=settings.bench_timeout,
                workers=settings.bench_workers,
                extra_args=extra,
            )
            rows = await runner.run(paths)

            if args.output:
                with open(args.output, "w", newline="") as fh:
                    write_table(rows, fh)
            else:
                write_table(rows, sys.stdout)

            return ExitCode.OK

        except Exception as ex:
            return self.fail(ex)
