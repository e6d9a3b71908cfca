# SPDX-License-Identifier: GPL-3.0-or-later
# Copyright (C) 2025 South Patron LLC
# This file is part of fccsolve and licensed under the GPLv3+.
# See <https://www.gnu.org/licenses/> for details.

from __future__ import annotations

import typing
import enum
import logging

from dataclasses import dataclass, field

import networkx as nx

from ..core import exceptions as fex
from .tree_decomposition import TreeDecomposition, decomposition_violations


class NodeKind(enum.Enum):
    LEAF = "leaf"
    INTRODUCE = "introduce"
    FORGET = "forget"
    JOIN = "join"


@dataclass(frozen=True)
class NiceNode:
    id: int
    kind: NodeKind
    bag: typing.FrozenSet[int]
    vertex: typing.Optional[int] = None
    children: typing.Tuple[int, ...] = ()


@dataclass
class NiceTreeDecomposition:
    nodes: typing.Dict[int, NiceNode] = field(default_factory=dict)
    root: int = 0

    @property
    def width(self) -> int:
        return max((len(n.bag) for n in self.nodes.values()), default=0) - 1

    def postorder(self) -> typing.List[NiceNode]:
        """
        Children before parents, children visited in the order stored.
        """
        out: typing.List[NiceNode] = []
        stack: typing.List[typing.Tuple[int, bool]] = [(self.root, False)]
        while stack:
            nid, expanded = stack.pop()
            node = self.nodes[nid]
            if expanded:
                out.append(node)
                continue
            stack.append((nid, True))
            for child in reversed(node.children):
                stack.append((child, False))
        return out

    def subtree_vertices(self) -> typing.Dict[int, typing.FrozenSet[int]]:
        """
        For each node, the union of the bags at and below it.
        """
        seen: typing.Dict[int, typing.FrozenSet[int]] = {}
        for node in self.postorder():
            acc = set(node.bag)
            for child in node.children:
                acc |= seen[child]
            seen[node.id] = frozenset(acc)
        return seen


class _Builder:

    def __init__(self) -> None:
        self.nice = NiceTreeDecomposition()

    def add(
        self,
        kind: NodeKind,
        bag: typing.Iterable[int],
        vertex: typing.Optional[int] = None,
        children: typing.Tuple[int, ...] = (),
    ) -> int:
        nid = len(self.nice.nodes) + 1
        self.nice.nodes[nid] = NiceNode(
            id=nid,
            kind=kind,
            bag=frozenset(bag),
            vertex=vertex,
            children=children,
        )
        return nid

    def chain_from_leaf(self, bag: typing.FrozenSet[int]) -> int:
        ordered = sorted(bag)
        current = {ordered[0]}
        top = self.add(NodeKind.LEAF, current, ordered[0])
        for v in ordered[1:]:
            current.add(v)
            top = self.add(NodeKind.INTRODUCE, current, v, (top,))
        return top

    def morph(
        self,
        top: int,
        target: typing.FrozenSet[int],
    ) -> int:
        """
        Forgets then introduces, ascending, until the bag equals target.
        """
        current = set(self.nice.nodes[top].bag)
        for v in sorted(current - target):
            current.discard(v)
            top = self.add(NodeKind.FORGET, current, v, (top,))
        for v in sorted(target - current):
            current.add(v)
            top = self.add(NodeKind.INTRODUCE, current, v, (top,))
        return top

    def join(self, tops: typing.List[int]) -> int:
        top = tops[0]
        for other in tops[1:]:
            bag = self.nice.nodes[top].bag
            top = self.add(NodeKind.JOIN, bag, None, (top, other))
        return top


def _linked_tree(td: TreeDecomposition) -> typing.Tuple[nx.Graph, int]:
    """
    Drops empty bags and chains the pieces left behind into one tree.
    """
    tree = td.tree()
    tree.remove_nodes_from([b for b, bag in td.bags.items() if not bag])

    pieces = sorted(nx.connected_components(tree), key=min)
    heads = [min(p) for p in pieces]
    for a, b in zip(heads, heads[1:]):
        tree.add_edge(a, b)

    return tree, heads[0]


def to_nice(td: TreeDecomposition, graph: nx.Graph) -> NiceTreeDecomposition:
    """
    Converts a raw tree decomposition into a nice one of the same width
    with an empty root bag.
    """
    tree, root = _linked_tree(td)
    builder = _Builder()

    parent: typing.Dict[int, typing.Optional[int]] = {root: None}
    order: typing.List[int] = []
    stack = [root]
    while stack:
        b = stack.pop()
        order.append(b)
        for c in sorted(tree[b], reverse=True):
            if c not in parent:
                parent[c] = b
                stack.append(c)

    children: typing.Dict[int, typing.List[int]] = {b: [] for b in order}
    for b in order[1:]:
        p = parent[b]
        assert p is not None
        children[p].append(b)

    tops: typing.Dict[int, int] = {}
    for b in reversed(order):
        bag = td.bags[b]
        kids = sorted(children[b])
        if not kids:
            tops[b] = builder.chain_from_leaf(bag)
            continue
        tops[b] = builder.join([builder.morph(tops[c], bag) for c in kids])

    top = builder.morph(tops[root], frozenset())
    builder.nice.root = top

    nice = builder.nice
    logging.debug(
        f"Nice decomposition with {len(nice.nodes)} nodes, width {nice.width}"
    )
    validate_nice(graph, nice)
    return nice


def validate_nice(graph: nx.Graph, nice: NiceTreeDecomposition) -> None:
    """
    Checks the decomposition properties and the node-kind rules.
    """
    tree = nx.Graph()
    tree.add_nodes_from(nice.nodes)
    for node in nice.nodes.values():
        for child in node.children:
            tree.add_edge(node.id, child)

    bags = {nid: node.bag for nid, node in nice.nodes.items()}
    violations = decomposition_violations(graph, bags, tree)

    if nice.root not in nice.nodes:
        violations.append(f"root {nice.root} is not a node")
    elif nice.nodes[nice.root].bag:
        violations.append("the root bag is not empty")

    for node in nice.nodes.values():
        kids = [nice.nodes[c] for c in node.children if c in nice.nodes]
        if len(kids) != len(node.children):
            violations.append(f"node {node.id} has unknown children")
            continue

        match node.kind:
            case NodeKind.LEAF:
                if kids or len(node.bag) != 1:
                    violations.append(f"leaf {node.id} is malformed")
            case NodeKind.INTRODUCE:
                if (
                    len(kids) != 1
                    or node.vertex in kids[0].bag
                    or node.bag != kids[0].bag | {node.vertex}
                ):
                    violations.append(f"introduce node {node.id} is malformed")
            case NodeKind.FORGET:
                if (
                    len(kids) != 1
                    or node.vertex not in kids[0].bag
                    or node.bag != kids[0].bag - {node.vertex}
                ):
                    violations.append(f"forget node {node.id} is malformed")
            case NodeKind.JOIN:
                if len(kids) != 2 or any(k.bag != node.bag for k in kids):
                    violations.append(f"join node {node.id} is malformed")

    if violations:
        raise fex.DecompositionValidationException(
            kind="nice tree decomposition",
            violations=violations,
            source="nice tree decomposition",
        )
