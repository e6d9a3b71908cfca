# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .registry import SolveContext, SolverEntry, SolverRegistry
from .vertex_cover import (
    PreClustering,
    build_spot_graph,
    enumerate_preclusterings,
    solve_vc,
)
from .treewidth import solve_tw_fpt2, solve_tw_xp
from .treedepth import decide_td, solve_bounded_components, solve_td

__all__ = [
    "SolveContext",
    "SolverEntry",
    "SolverRegistry",
    "PreClustering",
    "build_spot_graph",
    "enumerate_preclusterings",
    "solve_vc",
    "solve_tw_fpt2",
    "solve_tw_xp",
    "decide_td",
    "solve_bounded_components",
    "solve_td",
]
