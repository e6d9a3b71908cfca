# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .brute_force import (
    brute_force_optimum,
    enumerate_fair_clusterings,
    find_nice_optimum,
    make_nice,
    restricted_optimum,
    verify_solution,
)

__all__ = [
    "brute_force_optimum",
    "enumerate_fair_clusterings",
    "find_nice_optimum",
    "make_nice",
    "restricted_optimum",
    "verify_solution",
]
