# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import sys
import typing
import argparse
import asyncio
import setproctitle

from ..core.logging.configure import configure_logging

from .commands import get_commands, AsyncCommand, ExitCode


def main(argv: typing.Optional[typing.List[str]] = None) -> ExitCode:
    """
    Main entry point for the program.
    """
    argv = sys.argv[1:] if argv is None else argv

    # Build the argument tree
    parser = argparse.ArgumentParser(
        prog="fccsolve",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Exact solvers for fair correlation clustering",
        add_help=False,
    )

    subparsers = parser.add_subparsers(
        dest="subcommand",
        metavar="<subcommand>",
        required=True,
    )

    # Let all the commands build their own parser
    commands = get_commands()
    for cmd, obj in commands.items():
        tmp = subparsers.add_parser(
            cmd,
            help=obj.help(),
            description=obj.description(),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        obj.build_parser(tmp)

    # If there are no arguments, print the help
    if not argv:
        parser.print_help()
        return ExitCode.OK

    try:
        myargs, remaining = parser.parse_known_args(argv)
    except SystemExit as ex:
        return ExitCode.OK if ex.code == 0 else ExitCode.COMMAND_LINE_ERROR

    # Set up logging
    configure_logging(myargs.log_levels)

    # Get the command and change process names
    obj = commands[myargs.subcommand]()

    setproctitle.setproctitle(f"fccsolve {myargs.subcommand}")

    # Dispatch appropriately
    if isinstance(obj, AsyncCommand):
        rc = asyncio.run(obj.main(myargs, remaining))
    else:
        rc = obj.main(myargs, remaining)

    # ... and return it.
    return rc
