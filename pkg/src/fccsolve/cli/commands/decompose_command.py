# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import typing
import argparse

from fccsolve.decomp import (
    graph_parameters,
    min_vertex_cover,
    tree_decomposition,
    treedepth_forest,
)
from fccsolve.formats import (
    parse_instance,
    write_forest,
    write_tree_decomposition,
)

from .exit_code import ExitCode
from .command import Command


class DecomposeCommand(Command):

    @classmethod
    def command(cls) -> str:
        return "decompose"

    @classmethod
    def help(cls) -> str:
        return "Print decompositions and graph parameters"

    @classmethod
    def description(cls) -> str:
        return """
Compute a minimum vertex cover, a tree decomposition or a treedepth forest
of an instance graph. Decompositions are printed in the formats accepted by
'solve --td-file' and 'solve --forest-file'.
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
            "--kind",
            dest="kind",
            action="store",
            default="all",
            choices=["vc", "tw", "td", "all"],
            help="Which decomposition to print. Default is all.",
        )
        parser.add_argument(
            "--heuristic",
            dest="heuristic",
            action="store_true",
            default=False,
            help="Compute decompositions heuristically instead of exactly.",
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
            settings = self.settings(args)
            instance = parse_instance(args.instance)
            graph = instance.to_networkx()

            if args.kind in ("vc", "all"):
                cover = min_vertex_cover(graph)
                print(f"c vertex cover of size {cover.k}")
                print("v " + " ".join(str(v) for v in sorted(cover.cover)))

            if args.kind in ("tw", "all"):
                td = tree_decomposition(
                    graph,
                    settings.treewidth_mode,
                    exact_cap=settings.exact_treewidth_cap,
                )
                print(f"c tree decomposition of width {td.width}")
                print(write_tree_decomposition(td, instance.n), end="")

            if args.kind in ("td", "all"):
                forest = treedepth_forest(
                    graph,
                    settings.treedepth_mode,
                    exact_cap=settings.exact_treedepth_cap,
                )
                print(f"c treedepth forest of height {forest.height}")
                print(write_forest(forest), end="")

            if args.kind == "all":
                params = graph_parameters(graph, settings)
                for key, value in params.model_dump().items():
                    print(f"c {key} = {value}")

            return ExitCode.OK

        except Exception as ex:
            return self.fail(ex)
