# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from dataclasses import dataclass, field

import networkx as nx

from ..core import exceptions as fex


@dataclass
class TreedepthForest:
    """
    A rooted forest given by parent pointers; roots map to None.
    """

    parent: typing.Dict[int, typing.Optional[int]] = field(default_factory=dict)

    def roots(self) -> typing.List[int]:
        return sorted(v for v, p in self.parent.items() if p is None)

    def children(self) -> typing.Dict[int, typing.List[int]]:
        kids: typing.Dict[int, typing.List[int]] = {v: [] for v in self.parent}
        for v in sorted(self.parent):
            p = self.parent[v]
            if p is not None:
                kids[p].append(v)
        return kids

    def depth(self) -> typing.Dict[int, int]:
        """
        Roots have depth 1.
        """
        depths: typing.Dict[int, int] = {}
        kids = self.children()
        stack = [(r, 1) for r in self.roots()]
        while stack:
            v, d = stack.pop()
            depths[v] = d
            stack.extend((c, d + 1) for c in kids[v])
        return depths

    @property
    def height(self) -> int:
        return max(self.depth().values(), default=0)

    def ancestors(self, v: int) -> typing.List[int]:
        """
        From the parent up to the root.
        """
        out: typing.List[int] = []
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def subtree(self, v: int) -> typing.List[int]:
        kids = self.children()
        out: typing.List[int] = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(kids[u])
        return sorted(out)

    def copy(self) -> TreedepthForest:
        return TreedepthForest(parent=dict(self.parent))


# ----- Validation -----------------------------------------------------------


def validate_forest(graph: nx.Graph, forest: TreedepthForest) -> None:
    violations: typing.List[str] = []

    for v in sorted(graph.nodes):
        if v not in forest.parent:
            violations.append(f"vertex {v} has no parent entry")

    for v, p in sorted(forest.parent.items()):
        if v not in graph:
            violations.append(f"unknown vertex {v}")
        if p is not None and p not in forest.parent:
            violations.append(f"vertex {v} has unknown parent {p}")

    if not violations:
        # Parent pointers must terminate at a root
        state: typing.Dict[int, int] = {}
        for start in sorted(forest.parent):
            path = []
            v: typing.Optional[int] = start
            while v is not None and v not in state:
                state[v] = 1
                path.append(v)
                v = forest.parent[v]
            if v is not None and state.get(v) == 1 and v in path:
                violations.append(f"the parent pointers of {v} form a cycle")
                break
            for u in path:
                state[u] = 2

    if not violations:
        for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
            if u not in forest.ancestors(v) and v not in forest.ancestors(u):
                violations.append(
                    f"edge ({u}, {v}) does not join an ancestor and a descendant"
                )

    if violations:
        raise fex.DecompositionValidationException(
            kind="treedepth forest",
            violations=violations,
            source="treedepth forest",
        )


# ----- Construction ---------------------------------------------------------


class _ExactTreedepth:
    """
    td(G) = 1 + min over v of td(G - v) for connected G, and the maximum
    over components otherwise. Vertex sets are bitmasks.
    """

    def __init__(self, graph: nx.Graph, nodes: typing.List[int]) -> None:
        self.nodes = nodes
        index = {v: i for i, v in enumerate(nodes)}
        self.masks = [0] * len(nodes)
        for u, v in graph.edges:
            self.masks[index[u]] |= 1 << index[v]
            self.masks[index[v]] |= 1 << index[u]
        self.memo: typing.Dict[int, typing.Tuple[int, int]] = {}

    def components(self, mask: int) -> typing.List[int]:
        comps = []
        rest = mask
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                f = frontier
                nbrs = 0
                while f:
                    b = f & -f
                    nbrs |= self.masks[b.bit_length() - 1]
                    f ^= b
                frontier = nbrs & mask & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def connected(self, mask: int) -> typing.Tuple[int, int]:
        """
        (treedepth, chosen root index) of a connected vertex set.
        """
        if mask in self.memo:
            return self.memo[mask]

        if mask & (mask - 1) == 0:
            rc = (1, mask.bit_length() - 1)
            self.memo[mask] = rc
            return rc

        best = (mask.bit_count() + 1, -1)
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            depth = 1
            for comp in self.components(mask & ~low):
                depth = max(depth, 1 + self.connected(comp)[0])
                if depth >= best[0]:
                    break
            if depth < best[0]:
                best = (depth, v)

        self.memo[mask] = best
        return best

    def build(
        self,
        mask: int,
        parent: typing.Optional[int],
        out: typing.Dict[int, typing.Optional[int]],
    ) -> None:
        stack = [(mask, parent)]
        while stack:
            m, p = stack.pop()
            _, v = self.connected(m)
            out[self.nodes[v]] = p
            for comp in self.components(m & ~(1 << v)):
                stack.append((comp, self.nodes[v]))


def treedepth_forest(
    graph: nx.Graph,
    mode: typing.Literal["exact", "heuristic", "file"] = "exact",
    source: typing.Optional[TreedepthForest] = None,
    exact_cap: int = 20,
) -> TreedepthForest:
    if mode == "file":
        if source is None:
            raise fex.ParameterException(
                parameter="source",
                reason="file mode needs a parsed forest",
            )
        validate_forest(graph, source)
        return source

    forest = TreedepthForest()

    if mode == "heuristic":
        for comp in sorted(nx.connected_components(graph), key=min):
            root = min(comp)
            forest.parent[root] = None
            tree = nx.dfs_tree(graph.subgraph(comp), source=root)
            for u, v in tree.edges:
                forest.parent[v] = u

    elif mode == "exact":
        if graph.number_of_nodes() > exact_cap:
            raise fex.SizeLimitException(
                what="graph for exact treedepth",
                size=graph.number_of_nodes(),
                cap=exact_cap,
                hint="use the heuristic mode or supply a forest file",
            )
        for comp in sorted(nx.connected_components(graph), key=min):
            nodes = sorted(comp)
            search = _ExactTreedepth(graph.subgraph(nodes), nodes)
            search.build((1 << len(nodes)) - 1, None, forest.parent)

    else:
        raise fex.ParameterException(
            parameter="mode",
            reason=f"unknown treedepth mode {mode}",
        )

    logging.debug(f"Treedepth forest ({mode}) of height {forest.height}")
    validate_forest(graph, forest)
    return forest
