# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import time
import typing
import argparse
import logging

from fccsolve.core import exceptions as fex
from fccsolve.core.clustering import Clustering
from fccsolve.core.instance import ColoredInstance
from fccsolve.core.result import SolveResult
from fccsolve.decomp.nice import to_nice
from fccsolve.decomp.tree_decomposition import tree_decomposition
from fccsolve.formats import (
    SolutionReport,
    load_forest,
    load_tree_decomposition,
    parse_instance,
    write_report,
)
from fccsolve.solvers import SolveContext, SolverRegistry
from fccsolve.utils.generators import relabel

from .exit_code import ExitCode
from .command import Command


class SolveCommand(Command):

    @classmethod
    def command(cls) -> str:
        return "solve"

    @classmethod
    def help(cls) -> str:
        return "Solve an instance with one algorithm"

    @classmethod
    def description(cls) -> str:
        return """
Solve a fair correlation clustering instance exactly.

Without --budget the minimum cost is reported. With --budget the answer
is also decided, and the exit status is non-zero when the minimum cost
exceeds the budget.
"""

    @classmethod
    def build_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "instance",
            metavar="<instance file>",
            type=str,
            help="Instance in the 'p fcc' format",
        )
        parser.add_argument(
            "--algo",
            dest="algo",
            action="store",
            default="tw-xp",
            choices=SolverRegistry.names(),
            help="Solver to run. Default is tw-xp.",
        )
        parser.add_argument(
            "--budget",
            dest="budget",
            action="store",
            default=None,
            type=int,
            metavar="<B>",
            help="Decide whether the minimum cost is at most B",
        )
        parser.add_argument(
            "--td-file",
            dest="td_file",
            action="store",
            default=None,
            metavar="<path>",
            help="Tree decomposition in the 's td' format for the tw solvers",
        )
        parser.add_argument(
            "--forest-file",
            dest="forest_file",
            action="store",
            default=None,
            metavar="<path>",
            help="Treedepth forest, one '<vertex> <parent-or-0>' line per vertex",
        )
        parser.add_argument(
            "--seed",
            dest="seed",
            action="store",
            default=None,
            type=int,
            metavar="<seed>",
            help="Solve a copy with the vertices shuffled by this seed and map the answer back",
        )
        parser.add_argument(
            "--report",
            dest="report",
            action="store",
            default=None,
            metavar="<path>",
            help="Also write the report as JSON, or YAML for .yml/.yaml paths",
        )

        cls.add_solver_options(parser)
        cls.add_default_options(parser)

    def _context(
        self,
        args: argparse.Namespace,
        instance: ColoredInstance,
    ) -> SolveContext:
        settings = self.settings(args)
        context = SolveContext(settings=settings, gamma=args.gamma)

        if args.td_file:
            graph = instance.to_networkx()
            td = tree_decomposition(
                graph, "file", source=load_tree_decomposition(args.td_file)
            )
            context.tree_decomposition = to_nice(td, graph)

        if args.forest_file:
            context.forest = load_forest(args.forest_file)

        return context

    def _solve(
        self,
        args: argparse.Namespace,
        instance: ColoredInstance,
    ) -> SolveResult:
        if args.seed is None:
            return SolverRegistry.solve(
                args.algo, instance, self._context(args, instance)
            )

        if args.td_file or args.forest_file:
            raise fex.ParameterException(
                parameter="seed",
                reason="decomposition files name the original vertex labels",
                hint="drop --seed or the decomposition files",
            )

        shuffled, mapping = relabel(instance, args.seed)
        result = SolverRegistry.solve(
            args.algo, shuffled, self._context(args, shuffled)
        )
        back = {new: old for old, new in mapping.items()}
        return result.model_copy(
            update={
                "clustering": Clustering.of(
                    [back[v] for v in c] for c in result.clustering.clusters
                )
            }
        )

    def main(
        self,
        args: argparse.Namespace,
        rem: typing.List[str],
    ) -> ExitCode:
        """
        Main entry point for the application.
        """
        try:
            instance = parse_instance(args.instance)
            logging.info(
                f"Solving {args.instance} with {args.algo}: "
                f"n={instance.n} m={instance.m}"
            )

            started = time.perf_counter()
            result = self._solve(args, instance)
            elapsed = time.perf_counter() - started

            report = SolutionReport.of(
                result,
                instance,
                wall_time=elapsed,
                budget=args.budget,
                source=args.instance,
            )
            print(report.to_text(), end="")

            if args.report:
                write_report(report, args.report)

            if report.decision is False:
                return ExitCode.BUDGET_EXCEEDED
            return ExitCode.OK

        except Exception as ex:
            return self.fail(ex)
