# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from .vertex_cover import VertexCoverResult, min_vertex_cover, is_vertex_cover
from .tree_decomposition import (
    TreeDecomposition,
    elimination_order_decomposition,
    tree_decomposition,
    validate_tree_decomposition,
)
from .nice import NiceNode, NiceTreeDecomposition, NodeKind, to_nice, validate_nice
from .treedepth import TreedepthForest, treedepth_forest, validate_forest
from .parameters import GraphParameters, graph_parameters

__all__ = [
    "VertexCoverResult",
    "min_vertex_cover",
    "is_vertex_cover",
    "TreeDecomposition",
    "elimination_order_decomposition",
    "tree_decomposition",
    "validate_tree_decomposition",
    "NiceNode",
    "NiceTreeDecomposition",
    "NodeKind",
    "to_nice",
    "validate_nice",
    "TreedepthForest",
    "treedepth_forest",
    "validate_forest",
    "GraphParameters",
    "graph_parameters",
]
