# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import typing
import argparse

from fccsolve.formats import save_instance, write_instance
from fccsolve.utils.generators import FAMILIES, generate

from .exit_code import ExitCode
from .command import Command


def fairlet_arg(text: str) -> typing.Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma separated counts such as 2,1, got {text}"
        )


class GenCommand(Command):

    @classmethod
    def command(cls) -> str:
        return "gen"

    @classmethod
    def help(cls) -> str:
        return "Generate a random colored instance"

    @classmethod
    def description(cls) -> str:
        return """
Generate a reproducible random instance. The same family, parameters and
seed always produce a byte-identical file.
"""

    @classmethod
    def build_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--family",
            dest="family",
            action="store",
            required=True,
            choices=list(FAMILIES),
            help="Graph family",
        )
        parser.add_argument(
            "--n",
            dest="n",
            action="store",
            required=True,
            type=int,
            metavar="<n>",
            help="Number of vertices; a multiple of the fairlet size",
        )
        parser.add_argument(
            "--fairlet",
            dest="fairlet",
            action="store",
            default=(1, 1),
            type=fairlet_arg,
            metavar="<c1,c2,...>",
            help="Color counts of one fairlet. Default is 1,1.",
        )
        parser.add_argument(
            "--seed",
            dest="seed",
            action="store",
            default=0,
            type=int,
            metavar="<seed>",
            help="Random seed. Default is 0.",
        )
        parser.add_argument(
            "--p",
            dest="p",
            action="store",
            default=0.3,
            type=float,
            metavar="<p>",
            help="Edge probability for gnp. Default is 0.3.",
        )
        parser.add_argument(
            "--k",
            dest="k",
            action="store",
            default=2,
            type=int,
            metavar="<k>",
            help="Width of the k-tree family. Default is 2.",
        )
        parser.add_argument(
            "--partial",
            dest="partial",
            action="store",
            default=1.0,
            type=float,
            metavar="<q>",
            help="Probability that a k-tree edge survives. Default is 1.0.",
        )
        parser.add_argument(
            "--star-size",
            dest="star_size",
            action="store",
            default=4,
            type=int,
            metavar="<s>",
            help="Vertices per star in star-forest. Default is 4.",
        )
        parser.add_argument(
            "--output",
            dest="output",
            action="store",
            default=None,
            metavar="<path>",
            help="Write the instance here instead of standard output",
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
            instance = generate(
                args.family,
                args.n,
                args.fairlet,
                args.seed,
                p=args.p,
                k=args.k,
                partial=args.partial,
                star_size=args.star_size,
            )
            fairlet = ",".join(str(c) for c in args.fairlet)
            comments = [
                f"family={args.family} n={args.n} fairlet={fairlet} seed={args.seed}"
            ]

            if args.output:
                save_instance(instance, args.output, comments)
            else:
                print(write_instance(instance, comments), end="")

            return ExitCode.OK

        except Exception as ex:
            return self.fail(ex)
