# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import sys
import typing
import argparse
import traceback

from abc import ABC, abstractmethod

from fccsolve.core import exceptions as fex
from fccsolve.core.config import SolverSettings

from .exit_code import ExitCode


class BaseCommand(ABC):

    @classmethod
    @abstractmethod
    def command(cls) -> str: ...

    @classmethod
    @abstractmethod
    def help(cls) -> str: ...

    @classmethod
    @abstractmethod
    def description(cls) -> str: ...

    @classmethod
    @abstractmethod
    def build_parser(cls, parser: argparse.ArgumentParser): ...

    @classmethod
    def add_default_options(
        cls,
        parser: argparse.ArgumentParser,
    ):
        group = parser.add_argument_group("Common Options")
        group.add_argument(
            "--log-level",
            dest="log_levels",
            action="append",
            default=[],
            metavar="<LEVEL or LOGGER=LEVEL>",
            help="Set the logging level globally or for a specific logger. (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
        )
        group.add_argument(
            "--config",
            dest="config",
            action="store",
            default=None,
            metavar="<path>",
            help="Settings file. Default is the first fccsolve.conf on the search path.",
        )

    @classmethod
    def add_solver_options(
        cls,
        parser: argparse.ArgumentParser,
    ):
        group = parser.add_argument_group("Solver Options")
        group.add_argument(
            "--oracle-cap",
            dest="oracle_cap",
            action="store",
            default=None,
            type=int,
            metavar="<n>",
            help="Largest instance the brute-force oracle accepts.",
        )
        group.add_argument(
            "--gamma",
            dest="gamma",
            action="store",
            default=None,
            type=int,
            metavar="<number>",
            help="Cluster size bound for the treedepth solver. Default is max(24 * forest height, fairlet size).",
        )
        group.add_argument(
            "--heuristic",
            dest="heuristic",
            action="store_true",
            default=False,
            help="Compute decompositions heuristically instead of exactly.",
        )

    @classmethod
    def settings(cls, args: argparse.Namespace) -> SolverSettings:
        """
        File settings with the command line flags applied on top.
        """
        settings = SolverSettings.load(args.config)
        mode = "heuristic" if getattr(args, "heuristic", False) else None
        return settings.override(
            oracle_cap=getattr(args, "oracle_cap", None),
            treewidth_mode=mode,
            treedepth_mode=mode,
            bench_timeout=getattr(args, "timeout", None),
            bench_workers=getattr(args, "workers", None),
        )

    @classmethod
    def fail(cls, ex: Exception) -> ExitCode:
        """
        Prints the exception and picks the exit status for it.
        """
        exc_type = ex.__class__.__name__

        match ex:
            case fex.ParsingException() | fex.InstanceValidationException():
                banner, rc = "PARSE ERROR", ExitCode.PARSE_ERROR
            case fex.ParameterException() | fex.SizeLimitException():
                banner, rc = "PRECONDITION FAILED", ExitCode.PRECONDITION_FAILED
            case fex.DecompositionValidationException():
                banner, rc = "PRECONDITION FAILED", ExitCode.PRECONDITION_FAILED
            case fex.RegistryException():
                banner, rc = "UNKNOWN SOLVER", ExitCode.COMMAND_LINE_ERROR
            case fex.ConfigurationException():
                banner, rc = "CONFIGURATION PROBLEM", ExitCode.CONFIGURATION_PROBLEM
            case OSError():
                banner, rc = "FILE ERROR", ExitCode.COMMAND_LINE_ERROR
            case _:
                print(
                    "************** UNHANDLED EXCEPTION **************",
                    file=sys.stderr,
                )
                traceback.print_exc()
                return ExitCode.ERROR

        print(f"************** {banner} **************", file=sys.stderr)
        print(f"\n{exc_type}: {str(ex)}", file=sys.stderr)
        return rc


class Command(BaseCommand):

    @abstractmethod
    def main(self, args: argparse.Namespace, rem: typing.List[str]) -> ExitCode:
        """
        Main method.
        """
        pass


class AsyncCommand(BaseCommand):

    @abstractmethod
    async def main(
        self, args: argparse.Namespace, rem: typing.List[str]
    ) -> ExitCode:
        """
        Main method.
        """
        pass
