# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import logging

from dataclasses import dataclass, field

import networkx as nx

from networkx.algorithms.approximation import treewidth_min_fill_in

from ..core import exceptions as fex


DecompositionMode = typing.Literal["exact", "heuristic", "file"]


@dataclass
class TreeDecomposition:
    """
    A raw tree decomposition: numbered bags and the tree edges between them.
    """

    bags: typing.Dict[int, typing.FrozenSet[int]] = field(default_factory=dict)
    edges: typing.List[typing.Tuple[int, int]] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def tree(self) -> nx.Graph:
        t = nx.Graph()
        t.add_nodes_from(self.bags)
        t.add_edges_from(self.edges)
        return t


# ----- Validation -----------------------------------------------------------


def decomposition_violations(
    graph: nx.Graph,
    bags: typing.Mapping[typing.Hashable, typing.FrozenSet[int]],
    tree: nx.Graph,
) -> typing.List[str]:
    """
    Lists every way the bags fail to decompose the graph.
    """
    violations: typing.List[str] = []

    if not bags:
        return ["the decomposition has no bags"]

    if not nx.is_tree(tree):
        violations.append("the bags are not connected as a tree")

    where: typing.Dict[int, typing.List[typing.Hashable]] = {}
    for node, bag in bags.items():
        for v in bag:
            if v not in graph:
                violations.append(f"bag {node} holds unknown vertex {v}")
            where.setdefault(v, []).append(node)

    for v in sorted(graph.nodes):
        if v not in where:
            violations.append(f"vertex {v} is in no bag")
        elif len(where[v]) > 1 and not nx.is_connected(tree.subgraph(where[v])):
            violations.append(f"the bags holding vertex {v} are disconnected")

    for u, v in sorted(tuple(sorted(e)) for e in graph.edges):
        if not any(u in bags[node] for node in where.get(v, [])):
            violations.append(f"edge ({u}, {v}) is in no bag")

    return violations


def validate_tree_decomposition(
    graph: nx.Graph,
    td: TreeDecomposition,
) -> None:
    violations = decomposition_violations(graph, td.bags, td.tree())
    if violations:
        raise fex.DecompositionValidationException(
            kind="tree decomposition",
            violations=violations,
            source="tree decomposition",
        )


# ----- Construction ---------------------------------------------------------


def elimination_order_decomposition(
    graph: nx.Graph,
    order: typing.Sequence[int],
) -> TreeDecomposition:
    """
    One bag per vertex: the vertex and its later neighbors in the filled
    graph. Each bag hangs off the bag of its earliest later neighbor;
    the remaining roots are chained together.
    """
    position = {v: i for i, v in enumerate(order)}
    adj = {v: set(graph[v]) - {v} for v in graph.nodes}

    higher: typing.Dict[int, typing.Set[int]] = {}
    for v in order:
        nbrs = adj[v]
        higher[v] = set(nbrs)
        for u in nbrs:
            adj[u] |= nbrs - {u}
            adj[u].discard(v)
        del adj[v]

    bag_id = {v: i + 1 for i, v in enumerate(order)}
    td = TreeDecomposition()
    roots: typing.List[int] = []

    for v in order:
        td.bags[bag_id[v]] = frozenset(higher[v] | {v})
        if higher[v]:
            parent = min(higher[v], key=lambda u: position[u])
            td.edges.append((bag_id[v], bag_id[parent]))
        else:
            roots.append(bag_id[v])

    for a, b in zip(roots, roots[1:]):
        td.edges.append((a, b))

    return td


def _heuristic_order_width(graph: nx.Graph) -> int:
    width, _ = treewidth_min_fill_in(graph)
    return width


def _bit_neighbors(graph: nx.Graph, nodes: typing.List[int]) -> typing.List[int]:
    index = {v: i for i, v in enumerate(nodes)}
    masks = [0] * len(nodes)
    for u, v in graph.edges:
        if u == v:
            continue
        masks[index[u]] |= 1 << index[v]
        masks[index[v]] |= 1 << index[u]
    return masks


def _elimination_degree(masks: typing.List[int], eliminated: int, v: int) -> int:
    """
    Counts vertices outside `eliminated` reachable from v through
    eliminated vertices: v's degree when eliminated right after them.
    """
    visited = 1 << v
    frontier = 1 << v
    reached = 0
    while frontier:
        nbrs = 0
        f = frontier
        while f:
            low = f & -f
            nbrs |= masks[low.bit_length() - 1]
            f ^= low
        nbrs &= ~visited
        visited |= nbrs
        reached |= nbrs & ~eliminated
        frontier = nbrs & eliminated
    return reached.bit_count()


def _exact_component_order(
    graph: nx.Graph,
    nodes: typing.List[int],
    upper: int,
) -> typing.List[int]:
    """
    Searches elimination orders as a dynamic program over the set of
    already eliminated vertices, keeping the best width seen per set.
    Returns an order of width at most `upper`.
    """
    masks = _bit_neighbors(graph, nodes)
    full = (1 << len(nodes)) - 1

    best = upper + 1
    best_order: typing.List[int] = []
    seen: typing.Dict[int, int] = {}

    def search(eliminated: int, width: int, order: typing.List[int]) -> None:
        nonlocal best, best_order

        if width >= best or seen.get(eliminated, best) <= width:
            return
        seen[eliminated] = width

        rest = full & ~eliminated
        remaining = rest.bit_count()
        if remaining - 1 <= width:
            tail = [i for i in range(len(nodes)) if rest >> i & 1]
            best = width
            best_order = order + tail
            return

        for v in range(len(nodes)):
            if not rest >> v & 1:
                continue
            w = max(width, _elimination_degree(masks, eliminated, v))
            if w >= best:
                continue
            order.append(v)
            search(eliminated | 1 << v, w, order)
            order.pop()

    search(0, -1, [])
    assert best_order, "the heuristic width must be reachable"
    return [nodes[i] for i in best_order]


def tree_decomposition(
    graph: nx.Graph,
    mode: DecompositionMode = "exact",
    source: typing.Optional[TreeDecomposition] = None,
    exact_cap: int = 25,
) -> TreeDecomposition:
    """
    Computes (exact, heuristic) or checks (file) a tree decomposition.
    """
    if mode == "file":
        if source is None:
            raise fex.ParameterException(
                parameter="source",
                reason="file mode needs a parsed decomposition",
            )
        validate_tree_decomposition(graph, source)
        return source

    if mode == "heuristic":
        _, decomp = treewidth_min_fill_in(graph)
        bags = sorted(decomp.nodes, key=lambda b: (sorted(b), len(b)))
        ids = {b: i + 1 for i, b in enumerate(bags)}
        td = TreeDecomposition(
            bags={ids[b]: frozenset(b) for b in bags},
            edges=[(ids[a], ids[b]) for a, b in decomp.edges],
        )

    elif mode == "exact":
        if graph.number_of_nodes() > exact_cap:
            raise fex.SizeLimitException(
                what="graph for exact treewidth",
                size=graph.number_of_nodes(),
                cap=exact_cap,
                hint="use the heuristic mode or supply a decomposition file",
            )

        order: typing.List[int] = []
        for comp in sorted(nx.connected_components(graph), key=min):
            nodes = sorted(comp)
            sub = graph.subgraph(nodes)
            upper = _heuristic_order_width(sub)
            order.extend(_exact_component_order(sub, nodes, upper))
        td = elimination_order_decomposition(graph, order)

    else:
        raise fex.ParameterException(
            parameter="mode",
            reason=f"unknown decomposition mode {mode}",
        )

    logging.debug(f"Tree decomposition ({mode}) of width {td.width}")
    validate_tree_decomposition(graph, td)
    return td
