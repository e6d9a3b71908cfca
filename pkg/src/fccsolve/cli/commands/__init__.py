# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

import typing

from .command import Command, AsyncCommand
from .exit_code import ExitCode

# Commands
from .solve_command import SolveCommand
from .decompose_command import DecomposeCommand
from .gen_command import GenCommand
from .bench_command import BenchCommand
from .verify_command import VerifyCommand


def get_commands() -> (
    typing.Dict[str, typing.Union[type[Command], type[AsyncCommand]]]
):
    return {
        x.command(): x
        for x in [
            SolveCommand,
            DecomposeCommand,
            GenCommand,
            BenchCommand,
            VerifyCommand,
        ]
    }


__all__ = [
    "ExitCode",
    "Command",
    "AsyncCommand",
    "get_commands",
]
