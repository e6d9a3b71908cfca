# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from dataclasses import dataclass

import networkx as nx


@dataclass(frozen=True)
class VertexCoverResult:
    cover: typing.FrozenSet[int]

    @property
    def k(self) -> int:
        return len(self.cover)


Adjacency = typing.Dict[int, typing.Set[int]]


def is_vertex_cover(graph: nx.Graph, cover: typing.Iterable[int]) -> bool:
    chosen = set(cover)
    return all(u in chosen or v in chosen for u, v in graph.edges)


def min_vertex_cover(graph: nx.Graph) -> VertexCoverResult:
    """
    Exact minimum vertex cover by branching on a maximum-degree vertex:
    either it joins the cover or all of its neighbors do. Degree-0 vertices
    are dropped and the neighbor of a degree-1 vertex is taken greedily.
    """
    adj: Adjacency = {v: set(graph[v]) - {v} for v in graph.nodes}

    search = _CoverSearch()
    search.run(adj, frozenset())

    assert search.best is not None
    logging.debug(
        f"Vertex cover of size {len(search.best)} after {search.nodes} nodes"
    )
    return VertexCoverResult(cover=search.best)


class _CoverSearch:

    def __init__(self) -> None:
        self.best: typing.Optional[typing.FrozenSet[int]] = None
        self.nodes: int = 0

    def run(self, adj: Adjacency, taken: typing.FrozenSet[int]) -> None:
        self.nodes += 1

        adj, taken = _kernelize(adj, taken)

        if self.best is not None and len(taken) >= len(self.best):
            return

        if not adj:
            self.best = taken
            return

        # Every edge needs an endpoint, so at least one more vertex
        if self.best is not None and len(taken) + 1 >= len(self.best):
            return

        v = max(sorted(adj), key=lambda x: len(adj[x]))

        # v joins the cover
        self.run(_without(adj, {v}), taken | {v})

        # all neighbors of v join the cover
        nbrs = set(adj[v])
        self.run(_without(adj, nbrs | {v}), taken | nbrs)


def _without(adj: Adjacency, removed: typing.Set[int]) -> Adjacency:
    return {
        u: nbrs - removed for u, nbrs in adj.items() if u not in removed
    }


def _kernelize(
    adj: Adjacency,
    taken: typing.FrozenSet[int],
) -> typing.Tuple[Adjacency, typing.FrozenSet[int]]:
    """
    Applies the degree-0 and degree-1 rules until neither fires.
    """
    adj = {u: set(n) for u, n in adj.items()}
    added: typing.Set[int] = set()

    changed = True
    while changed:
        changed = False
        for u in sorted(adj):
            if u not in adj:
                continue
            deg = len(adj[u])
            if deg == 0:
                del adj[u]
                changed = True
            elif deg == 1:
                (w,) = adj[u]
                added.add(w)
                for x in adj.pop(w):
                    adj[x].discard(w)
                changed = True

    return adj, taken | added
