# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing

import networkx as nx

from pydantic import BaseModel

from ..core.config import SolverSettings
from .vertex_cover import min_vertex_cover
from .tree_decomposition import tree_decomposition
from .treedepth import treedepth_forest


class GraphParameters(BaseModel):
    """
    Vertex cover number, treewidth and treedepth of a graph. The width
    and depth values are exact only where the matching flag says so.
    """

    vertex_cover_number: int
    treewidth: int
    treedepth: int
    treewidth_exact: bool
    treedepth_exact: bool

    class Config:
        extra = "forbid"
        frozen = True


def graph_parameters(
    graph: nx.Graph,
    settings: typing.Optional[SolverSettings] = None,
) -> GraphParameters:
    settings = settings or SolverSettings()
    n = graph.number_of_nodes()

    tw_exact = (
        settings.treewidth_mode == "exact" and n <= settings.exact_treewidth_cap
    )
    td_exact = (
        settings.treedepth_mode == "exact" and n <= settings.exact_treedepth_cap
    )

    td = tree_decomposition(
        graph,
        "exact" if tw_exact else "heuristic",
        exact_cap=settings.exact_treewidth_cap,
    )
    forest = treedepth_forest(
        graph,
        "exact" if td_exact else "heuristic",
        exact_cap=settings.exact_treedepth_cap,
    )

    return GraphParameters(
        vertex_cover_number=min_vertex_cover(graph).k,
        treewidth=td.width,
        treedepth=forest.height,
        treewidth_exact=tw_exact,
        treedepth_exact=td_exact,
    )
