# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .records import (
    CurrentEntry,
    DPParams,
    DPRecord,
    DPTable,
    Draft,
    OpenEntry,
    Witness,
)
from .transitions import (
    leaf_table,
    process_forget,
    process_introduce,
    process_join,
)
from .solver import prune_table, size_guesses, solve_tw_fpt2, solve_tw_xp

__all__ = [
    "CurrentEntry",
    "DPParams",
    "DPRecord",
    "DPTable",
    "Draft",
    "OpenEntry",
    "Witness",
    "leaf_table",
    "process_forget",
    "process_introduce",
    "process_join",
    "prune_table",
    "size_guesses",
    "solve_tw_fpt2",
    "solve_tw_xp",
]
