# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import typing
import argparse

from fccsolve.core.instance import compute_fairlet
from fccsolve.core.clustering import clustering_cost, is_fair
from fccsolve.formats import parse_instance, read_report
from fccsolve.oracle import verify_solution

from .exit_code import ExitCode
from .command import Command


class VerifyCommand(Command):

    @classmethod
    def command(cls) -> str:
        return "verify"

    @classmethod
    def help(cls) -> str:
        return "Check a solution report against its instance"

    @classmethod
    def description(cls) -> str:
        return """
Check that the clusters of a report partition the instance, are fair, and
cost at most the budget. Without --budget the cost claimed by the report
is used as the budget.
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
            "report",
            metavar="<report file>",
            type=str,
            help="Report written by 'solve --report'",
        )
        parser.add_argument(
            "--budget",
            dest="budget",
            action="store",
            default=None,
            type=int,
            metavar="<B>",
            help="Largest acceptable cost",
        )

        cls.add_default_options(parser)

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
            report = read_report(args.report)
            clustering = report.clustering()
            budget = report.cost if args.budget is None else args.budget

            if not clustering.is_partition_of(instance.n):
                print("INVALID: the clusters do not partition the vertices")
                return ExitCode.ERROR

            if not is_fair(clustering, compute_fairlet(instance), instance.chi):
                print("INVALID: some cluster is not fair")
                return ExitCode.ERROR

            cost = clustering_cost(instance, clustering)
            if cost != report.cost:
                print(f"INVALID: the report claims cost {report.cost}, actual {cost}")
                return ExitCode.ERROR

            if not verify_solution(instance, clustering, budget):
                print(f"OVER BUDGET: cost {cost} > {budget}")
                return ExitCode.BUDGET_EXCEEDED

            print(f"OK: fair partition of cost {cost} <= {budget}")
            return ExitCode.OK

        except Exception as ex:
            return self.fail(ex)
