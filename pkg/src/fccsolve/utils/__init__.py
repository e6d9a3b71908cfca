# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .generators import FAMILIES, generate, relabel
from .bench_runner import BenchRow, BenchRunner, instance_paths, mark_agreement, write_table

__all__ = [
    "FAMILIES",
    "generate",
    "relabel",
    "BenchRow",
    "BenchRunner",
    "instance_paths",
    "mark_agreement",
    "write_table",
]
