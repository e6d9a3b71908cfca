# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .program import Constraint, Program, Relation, Variable
from .solver import Solution, solve

__all__ = [
    "Constraint",
    "Program",
    "Relation",
    "Variable",
    "Solution",
    "solve",
]
