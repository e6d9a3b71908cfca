# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .instance import ColoredInstance, FairletVector, compute_fairlet
from .clustering import (
    Clustering,
    Cost,
    clustering_cost,
    cost_from_pair_counts,
    fairlet_tiling,
    is_fair,
    max_cluster_size_bound,
)
from .result import SolveResult, decide

__all__ = [
    "ColoredInstance",
    "FairletVector",
    "compute_fairlet",
    "Clustering",
    "Cost",
    "clustering_cost",
    "cost_from_pair_counts",
    "fairlet_tiling",
    "is_fair",
    "max_cluster_size_bound",
    "SolveResult",
    "decide",
]
