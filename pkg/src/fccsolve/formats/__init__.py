# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .instance_file import (
    parse_instance,
    parse_instance_text,
    save_instance,
    write_instance,
)
from .decomposition_file import (
    load_forest,
    load_tree_decomposition,
    parse_forest,
    parse_tree_decomposition,
    write_forest,
    write_tree_decomposition,
)
from .report import SolutionReport, dump_report, read_report, write_report

__all__ = [
    "parse_instance",
    "parse_instance_text",
    "save_instance",
    "write_instance",
    "load_forest",
    "load_tree_decomposition",
    "parse_forest",
    "parse_tree_decomposition",
    "write_forest",
    "write_tree_decomposition",
    "SolutionReport",
    "dump_report",
    "read_report",
    "write_report",
]
